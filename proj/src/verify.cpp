#include "barygeo/verify.hpp"

#include <algorithm>

#include "barygeo/checks.hpp"
#include "barygeo/checks_euler.hpp"
#include "barygeo/checks_general.hpp"
#include "barygeo/checks_inversion.hpp"
#include "barygeo/heronian.hpp"
#include "barygeo/runner.hpp"
#include "barygeo/samplers.hpp"

namespace barygeo {

namespace {

HPoint<double> to_double_point(const HPoint<Rat>& p) {
    return {p.x.get_d(), p.y.get_d(), p.z.get_d()};
}

struct TrialContext {
    TriangleMetric<Rat> tri;
    SplitMix64 rng;
    const VerifyConfig* cfg;
};

// Exact on-conic Q: named centers on the first trials, pencil samples after.
HPoint<Rat> on_conic_choice(const TriangleMetric<Rat>& t, const Conic<Rat>& conic,
                            std::size_t index, SplitMix64& rng) {
    switch (index % 5) {
        case 0: return named_center(t, CenterId::K);
        case 1: return named_center(t, CenterId::X56);
        case 2: return named_center(t, CenterId::X58);
        default: return sample_on_conic(t, conic, rng);
    }
}

template <class S>
TriangleMetric<S> backend_metric(const TriangleMetric<Rat>& t);

template <>
TriangleMetric<Rat> backend_metric<Rat>(const TriangleMetric<Rat>& t) {
    return t;
}

template <>
TriangleMetric<double> backend_metric<double>(const TriangleMetric<Rat>& t) {
    return TriangleMetric<double>::from_sides(t.a().get_d(), t.b().get_d(), t.c().get_d());
}

template <class S>
HPoint<S> backend_point(const HPoint<Rat>& p);

template <>
HPoint<Rat> backend_point<Rat>(const HPoint<Rat>& p) {
    return p;
}

template <>
HPoint<double> backend_point<double>(const HPoint<Rat>& p) {
    return to_double_point(p);
}

template <class S>
S backend_scalar(const Rat& v);

template <>
Rat backend_scalar<Rat>(const Rat& v) {
    return v;
}

template <>
double backend_scalar<double>(const Rat& v) {
    return v.get_d();
}

template <class S>
CheckReport dispatch_trial(const std::string& id, TrialContext& ctx, std::size_t index) {
    const VerifyConfig& cfg = *ctx.cfg;
    TriangleMetric<S> t = backend_metric<S>(ctx.tri);
    SplitMix64& rng = ctx.rng;

    auto resolve = [&](const std::optional<HPoint<Rat>>& fixed,
                       const std::optional<CenterId>& center) -> std::optional<HPoint<Rat>> {
        if (fixed) return fixed;
        if (center) return named_center(ctx.tri, *center);
        return std::nullopt;
    };
    std::optional<HPoint<Rat>> fixed_p = resolve(cfg.p, cfg.p_center);
    std::optional<HPoint<Rat>> fixed_q = resolve(cfg.q, cfg.q_center);
    auto pick_point = [&](const std::optional<HPoint<Rat>>& fixed) -> HPoint<Rat> {
        return fixed ? *fixed : sample_point(rng);
    };

    if (id == "lemma1") {
        HPoint<Rat> p = pick_point(fixed_p);
        Lemma1Params<S> params;
        if (index % 2 == 0 || fixed_q) {
            params.concurrent_mode = true;
            params.q = backend_point<S>(pick_point(fixed_q));
        } else {
            params.concurrent_mode = false;
            params.lambda = {backend_scalar<S>(rng.rational(9, 5)),
                             backend_scalar<S>(rng.rational(9, 5)),
                             backend_scalar<S>(rng.rational(9, 5))};
        }
        return check_lemma1(t, backend_point<S>(p), params);
    }
    if (id == "lemma2") {
        Rat k = cfg.k ? *cfg.k : rng.rational(10, 6);
        return check_lemma2(t, backend_scalar<S>(k));
    }
    if (id == "lemma3") {
        Rat k = cfg.k ? *cfg.k : rng.rational(10, 6);
        return check_lemma3(t, backend_scalar<S>(k));
    }
    if (id == "lemma4") return check_lemma4(t);
    if (id == "theorem5") {
        HPoint<Rat> q;
        if (fixed_q) {
            q = *fixed_q;
        } else {
            Conic<Rat> conic = circumconic_from_line(
                ctx.tri, join(named_center(ctx.tri, CenterId::I), named_center(ctx.tri, CenterId::G)));
            if (cfg.q_on_conic) {
                HLine<Rat> l{Rat(0), -*cfg.q_on_conic, Rat(1)};
                q = conic_line_second_intersection(conic, l, HPoint<Rat>{Rat(1), Rat(0), Rat(0)});
            } else if (index % 2 == 0) {
                q = on_conic_choice(ctx.tri, conic, index / 2, rng);
            } else {
                q = sample_off_conic(conic, rng);
            }
        }
        return check_theorem5(t, backend_point<S>(q));
    }
    if (id == "lemma6") return check_lemma6(t);
    if (id == "lemma8") return check_lemma8(t, backend_point<S>(pick_point(fixed_p)));
    if (id == "lemma9") return check_lemma9(t, backend_point<S>(pick_point(fixed_p)));
    if (id == "theorem7") {
        HPoint<Rat> p;
        if (fixed_p) {
            p = *fixed_p;
        } else if (index % 2 == 0) {
            switch ((index / 2) % 4) {
                case 0: p = named_center(ctx.tri, CenterId::G); break;
                case 1: p = named_center(ctx.tri, CenterId::O); break;
                case 2: p = named_center(ctx.tri, CenterId::NinePoint); break;
                default: p = sample_euler_point(ctx.tri, rng); break;
            }
        } else {
            p = sample_off_line(euler_line(ctx.tri), rng);
        }
        return check_theorem7(t, backend_point<S>(p));
    }
    if (id == "theorem10") {
        HPoint<Rat> p = fixed_p ? *fixed_p : sample_point(rng);
        HPoint<Rat> q;
        if (fixed_q) {
            q = *fixed_q;
        } else {
            HPoint<Rat> pstar = isogonal_conjugate(ctx.tri, p);
            HPoint<Rat> pc = complement(p);
            HLine<Rat> lstar = join(pstar, pc);
            Conic<Rat> conic = circumconic_from_line(ctx.tri, lstar);
            if (cfg.q_on_conic) {
                HLine<Rat> l{Rat(0), -*cfg.q_on_conic, Rat(1)};
                q = conic_line_second_intersection(conic, l, HPoint<Rat>{Rat(1), Rat(0), Rat(0)});
            } else if (index % 2 == 0) {
                q = sample_on_conic(ctx.tri, conic, rng);
            } else {
                q = sample_off_conic(conic, rng);
            }
        }
        return check_theorem10(t, backend_point<S>(p), backend_point<S>(q));
    }
    if (id == "p-equals-h") return check_pH_remark(t, backend_point<S>(pick_point(fixed_q)));
    if (id == "inversion-x56") return check_inversion_suite(t, InversionCase::X56);
    if (id == "inversion-x58") return check_inversion_suite(t, InversionCase::X58);
    if (id == "inversion-k") return check_inversion_suite(t, InversionCase::K);
    if (id == "inversion-i") return check_inversion_suite(t, InversionCase::I);
    throw geometry_error("unknown check id: " + id);
}

bool orthocenter_on_sideline(const TriangleMetric<Rat>& t) {
    HPoint<Rat> h = named_center(t, CenterId::H);
    return sgn(h.x) == 0 || sgn(h.y) == 0 || sgn(h.z) == 0;
}

}  // namespace

const std::vector<std::string>& verify_check_ids() {
    static const std::vector<std::string> ids = {
        "lemma1", "lemma2", "lemma3", "lemma4", "lemma6", "lemma8", "lemma9",
        "theorem5", "theorem7", "theorem10",
        "inversion-x56", "inversion-x58", "inversion-k", "inversion-i",
        "p-equals-h",
    };
    return ids;
}

VerifySummary run_verify(const VerifyConfig& cfg) {
    const auto& ids = verify_check_ids();
    if (std::find(ids.begin(), ids.end(), cfg.check_id) == ids.end())
        throw geometry_error("unknown check id: " + cfg.check_id);
    if (cfg.trials < 1) throw geometry_error("trials must be >= 1");

    // Triangle pool: the explicit triangle, or seeded Heronian triangles.
    std::vector<TriangleMetric<Rat>> pool;
    if (cfg.sides) {
        auto t = TriangleMetric<Rat>::from_sides((*cfg.sides)[0], (*cfg.sides)[1], (*cfg.sides)[2]);
        if (t.is_equilateral() &&
            (cfg.check_id == "theorem5" || cfg.check_id == "theorem7" ||
             cfg.check_id == "theorem10" || cfg.check_id == "p-equals-h"))
            throw geometry_error("equilateral: Euler line undefined");
        if (cfg.check_id == "p-equals-h" && orthocenter_on_sideline(t))
            throw geometry_error("right triangle: orthocenter lies on a sideline");
        pool.push_back(std::move(t));
    } else {
        HeronianGenerator gen(cfg.seed);
        std::size_t want = std::min<std::size_t>(cfg.trials, gen.pool_size());
        // Checks with extra preconditions (p-equals-h rejects right
        // triangles) may use up the generator before `want` is reached;
        // trials then cycle over the admissible triangles.
        try {
            while (pool.size() < want) {
                TriangleMetric<Rat> t = gen.next();
                if (cfg.check_id == "p-equals-h" && orthocenter_on_sideline(t)) continue;
                pool.push_back(std::move(t));
            }
        } catch (const geometry_error&) {
            if (pool.empty()) throw;
        }
    }

    TrialFn fn = [&cfg, &pool](std::size_t index) -> CheckReport {
        TrialContext ctx{pool[index % pool.size()], SplitMix64::for_trial(cfg.seed, index), &cfg};
        CheckReport rep = cfg.use_float ? dispatch_trial<double>(cfg.check_id, ctx, index)
                                        : dispatch_trial<Rat>(cfg.check_id, ctx, index);
        rep.inputs["trial"] = index;
        return rep;
    };

    std::vector<CheckReport> reports = run_trials(cfg.trials, fn, cfg.parallel);
    bool all = true;
    json arr = json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        arr.push_back(r);
    }
    VerifySummary out;
    out.all_passed = all;
    out.document = json{{"schema_version", 1},
                        {"check_id", cfg.check_id},
                        {"backend", cfg.use_float ? "float" : "exact"},
                        {"seed", cfg.seed},
                        {"trials", cfg.trials},
                        {"passed", all},
                        {"reports", arr}};
    return out;
}

}  // namespace barygeo
