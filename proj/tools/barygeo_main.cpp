// Command-line front end: triangle generators, theorem checks, JSON reports
// and SVG figures.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "barygeo/centers.hpp"
#include "barygeo/circles.hpp"
#include "barygeo/heronian.hpp"
#include "barygeo/report.hpp"
#include "barygeo/svg.hpp"
#include "barygeo/verify.hpp"

using namespace barygeo;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Accepts integers, fractions "n/d" and decimal strings "1.25".
Rat parse_rat(const std::string& s) {
    std::string text = s;
    auto dotpos = text.find('.');
    if (dotpos != std::string::npos) {
        std::string digits = text.substr(0, dotpos) + text.substr(dotpos + 1);
        std::size_t frac_len = text.size() - dotpos - 1;
        std::string den = "1" + std::string(frac_len, '0');
        text = digits + "/" + den;
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw geometry_error("cannot parse rational: " + s);
    if (sgn(q.get_den()) == 0) throw geometry_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::array<Rat, 3> parse_triple(const std::string& s) {
    std::array<Rat, 3> out;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = (i < 2) ? s.find(',', start) : s.size();
        if (comma == std::string::npos) throw geometry_error("expected three comma-separated values");
        out[i] = parse_rat(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

HPoint<Rat> parse_point(const std::string& s) {
    auto t = parse_triple(s);
    HPoint<Rat> p{t[0], t[1], t[2]};
    if (!is_valid(p)) throw geometry_error("zero point triple");
    return p;
}

// A point flag is either a coordinate triple "x,y,z" or a named center
// ("K", "x56", "i", ...), resolved against the run's triangle(s).
std::optional<CenterId> parse_center_name(const std::string& s) {
    if (auto id = center_from_name(s)) return id;
    std::string up = s;
    for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (auto id = center_from_name(up)) return id;
    if (up == "X5") return CenterId::NinePoint;
    return std::nullopt;
}

void emit(const json& doc, const std::optional<std::string>& out_path, bool compact = false) {
    std::string text = compact ? doc.dump() : doc.dump(2);
    text += "\n";
    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f) throw geometry_error("cannot open output file: " + *out_path);
        f << text;
    } else {
        std::fputs(text.c_str(), stdout);
    }
}

std::array<Rat, 3> sides_or_heronian(const std::optional<std::string>& sides_flag,
                                     std::uint64_t heronian_seed) {
    if (sides_flag) return parse_triple(*sides_flag);
    HeronianGenerator gen(heronian_seed);
    auto s = gen.next_sides();
    return {Rat(s[0]), Rat(s[1]), Rat(s[2])};
}

int cmd_centers(const std::optional<std::string>& sides_flag, std::uint64_t heronian_seed,
                const std::vector<std::string>& k_values, const std::optional<std::string>& center,
                const std::optional<std::string>& out_path, bool compact) {
    auto sides = sides_or_heronian(sides_flag, heronian_seed);
    auto t = TriangleMetric<Rat>::from_sides(sides[0], sides[1], sides[2]);

    json doc{{"schema_version", 1},
             {"backend", "exact"},
             {"sides", json::array({scalar_json(sides[0]), scalar_json(sides[1]),
                                    scalar_json(sides[2])})}};
    json centers = json::object();
    static const CenterId all[] = {CenterId::I, CenterId::G, CenterId::O, CenterId::H,
                                   CenterId::K, CenterId::NinePoint, CenterId::Nagel,
                                   CenterId::Spieker, CenterId::X56, CenterId::X57, CenterId::X58,
                                   CenterId::Ia, CenterId::Ib, CenterId::Ic, CenterId::D,
                                   CenterId::E, CenterId::F, CenterId::Mprime, CenterId::Nprime,
                                   CenterId::Pprime};
    if (center) {
        auto id = center_from_name(*center);
        if (!id) {
            std::fprintf(stderr, "error: unknown center '%s'\n", center->c_str());
            return kExitUsage;
        }
        centers[*center] = point_json(named_center(t, *id));
    } else {
        for (CenterId id : all) centers[center_name(id)] = point_json(named_center(t, id));
    }
    doc["centers"] = centers;

    if (!t.is_equilateral()) {
        Conic<Rat> conic = circumconic_from_line(
            t, join(named_center(t, CenterId::I), named_center(t, CenterId::G)));
        doc["conic_IG_isogonal"] = conic_json(conic);
    } else {
        doc["conic_IG_isogonal"] = nullptr;  // IG degenerates for the equilateral triangle
    }

    if (!k_values.empty()) {
        json family = json::array();
        for (const auto& kv : k_values) {
            json entry{{"k", kv}};
            if (kv == "inf") {
                entry["Q"] = point_json(lemma3_Q(t, KCoeff<Rat>::infinity()));
                entry["Qstar"] = point_json(lemma3_Qstar(t, KCoeff<Rat>::infinity()));
            } else {
                Rat k = parse_rat(kv);
                entry["Q"] = point_json(lemma3_Q(t, k));
                entry["Qstar"] = point_json(lemma3_Qstar(t, k));
            }
            family.push_back(entry);
        }
        doc["lemma3_family"] = family;
    }
    emit(doc, out_path, compact);
    return kExitPass;
}

int cmd_generate(std::uint64_t seed, std::size_t count, const std::optional<std::string>& out_path,
                 bool compact) {
    HeronianGenerator gen(seed);
    json arr = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        auto t = gen.next();
        arr.push_back(json{{"sides", json::array({scalar_json(t.a()), scalar_json(t.b()),
                                                  scalar_json(t.c())})},
                           {"area", scalar_json(t.area())}});
    }
    emit(json{{"schema_version", 1}, {"seed", seed}, {"triangles", arr}}, out_path, compact);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact barycentric triangle-geometry kernel and theorem verifier"};
    app.require_subcommand(1);

    std::optional<std::string> sides_flag;
    std::uint64_t heronian_seed = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string backend = "exact";
    double tol = 1e-9;
    std::optional<std::string> p_flag, q_flag, out_flag, center_flag, q_on_conic_flag, k_flag;
    bool serial = false;
    bool compact_json = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--sides", sides_flag, "triangle sides a,b,c (rationals or decimals)");
        sub->add_option("--heronian-seed", heronian_seed, "seed for the Heronian triangle pool");
        sub->add_option("--seed", seed, "run seed");
        sub->add_option("--out", out_flag, "output path (default stdout)");
        sub->add_flag("--json", compact_json, "compact single-line JSON output");
    };

    CLI::App* centers = app.add_subcommand("centers", "emit named centers as exact rationals");
    add_common(centers);
    std::vector<std::string> k_values;
    centers->add_option("--k", k_values, "similarity coefficients for the Q(k)/Q*(k) family "
                                         "(rational or 'inf')");
    centers->add_option("--center", center_flag, "emit a single named center");

    CLI::App* verify = app.add_subcommand("verify", "run a theorem check over generated trials");
    std::string check_id;
    verify->add_option("check", check_id, "check id")->required();
    add_common(verify);
    verify->add_option("--trials", trials, "number of trials (default 100)");
    verify->add_option("--backend", backend, "exact | float (default exact)");
    verify->add_option("--tol", tol, "relative tolerance for the float backend");
    verify->add_option("--p", p_flag, "fixed point P as x,y,z");
    verify->add_option("--q", q_flag, "fixed point Q as x,y,z");
    verify->add_option("--q-on-conic", q_on_conic_flag,
                       "rational pencil parameter for an exact on-conic Q");
    verify->add_option("--k", k_flag, "fixed similarity coefficient");
    verify->add_flag("--serial", serial, "run trials on the serial reference path");

    CLI::App* figure = app.add_subcommand("figure", "render an SVG figure");
    std::string figure_id;
    figure->add_option("id", figure_id, "theorem5 | lemma6 | inversion | theorem7 | theorem10")
        ->required();
    add_common(figure);
    figure->add_option("--p", p_flag, "point P as x,y,z");
    figure->add_option("--q", q_flag, "point Q as x,y,z");

    CLI::App* generate = app.add_subcommand("generate", "emit scalene Heronian triangles");
    add_common(generate);
    generate->add_option("--trials", trials, "number of triangles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (centers->parsed())
            return cmd_centers(sides_flag, heronian_seed, k_values, center_flag, out_flag,
                               compact_json);

        if (generate->parsed()) return cmd_generate(seed, trials, out_flag, compact_json);

        if (figure->parsed()) {
            FigureRequest req;
            req.figure_id = figure_id;
            req.sides = sides_or_heronian(sides_flag, heronian_seed);
            auto tri = TriangleMetric<Rat>::from_sides(req.sides[0], req.sides[1], req.sides[2]);
            auto resolve = [&](const std::string& s) -> HPoint<Rat> {
                if (s.find(',') == std::string::npos) {
                    if (auto id = parse_center_name(s)) return named_center(tri, *id);
                    throw geometry_error("unknown center name: " + s);
                }
                return parse_point(s);
            };
            if (p_flag) req.p = resolve(*p_flag);
            if (q_flag) req.q = resolve(*q_flag);
            std::string svg = render_figure(req);
            std::string path = out_flag.value_or("figure-" + figure_id + ".svg");
            std::ofstream f(path, std::ios::binary);
            if (!f) throw geometry_error("cannot open output file: " + path);
            f << svg;
            std::fprintf(stderr, "wrote %s\n", path.c_str());
            return kExitPass;
        }

        if (verify->parsed()) {
            if (backend != "exact" && backend != "float") {
                std::fprintf(stderr, "error: unknown backend '%s'\n", backend.c_str());
                return kExitUsage;
            }
            scalar_traits<double>::tolerance = tol;
            VerifyConfig cfg;
            cfg.check_id = check_id;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.use_float = (backend == "float");
            cfg.parallel = !serial;
            if (sides_flag) cfg.sides = parse_triple(*sides_flag);
            auto set_point = [&](const std::string& s, std::optional<HPoint<Rat>>& pt,
                                 std::optional<CenterId>& center) {
                if (s.find(',') == std::string::npos) {
                    auto id = parse_center_name(s);
                    if (!id) throw geometry_error("unknown center name: " + s);
                    center = id;
                } else {
                    pt = parse_point(s);
                }
            };
            if (p_flag) set_point(*p_flag, cfg.p, cfg.p_center);
            if (q_flag) set_point(*q_flag, cfg.q, cfg.q_center);
            if (q_on_conic_flag) cfg.q_on_conic = parse_rat(*q_on_conic_flag);
            if (k_flag) cfg.k = parse_rat(*k_flag);
            VerifySummary summary = run_verify(cfg);
            emit(summary.document, out_flag, compact_json);
            return summary.all_passed ? kExitPass : kExitCheckFailed;
        }
    } catch (const geometry_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
