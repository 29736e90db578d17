#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "barygeo/circles.hpp"
#include "barygeo/hpoint.hpp"

namespace barygeo {

using json = nlohmann::json;

inline json scalar_json(const Rat& v) { return v.get_str(); }
inline json scalar_json(double v) { return v; }

template <class S>
json point_json(const HPoint<S>& p) {
    HPoint<S> c = canon(p);
    return json::array({scalar_json(c.x), scalar_json(c.y), scalar_json(c.z)});
}

template <class S>
json line_json(const HLine<S>& l) {
    HLine<S> c = canon(l);
    return json::array({scalar_json(c.l), scalar_json(c.m), scalar_json(c.n)});
}

template <class S>
json conic_json(const Conic<S>& k) {
    return point_json(HPoint<S>{k.lambda, k.mu, k.nu});
}

struct SubVerdict {
    std::string name;
    bool pass = false;
    std::string note;
};

// Structured verdict of one theorem check. Deterministic for fixed
// (inputs, backend, seed); serializes with sorted keys.
struct CheckReport {
    std::string check_id;
    std::string backend;
    bool backend_downgrade = false;
    bool degenerate_sample = false;
    json inputs = json::object();
    bool pass = false;
    std::vector<SubVerdict> sub_verdicts;
    json witnesses = json::object();
    json counterexample = json::object();
};

inline void to_json(json& j, const SubVerdict& sv) {
    j = json{{"name", sv.name}, {"pass", sv.pass}};
    if (!sv.note.empty()) j["note"] = sv.note;
}

inline void to_json(json& j, const CheckReport& r) {
    j = json{{"check_id", r.check_id},
             {"backend", r.backend},
             {"inputs", r.inputs},
             {"pass", r.pass},
             {"sub_verdicts", r.sub_verdicts},
             {"witnesses", r.witnesses}};
    if (r.backend_downgrade) j["backend_downgrade"] = true;
    if (r.degenerate_sample) j["degenerate_sample"] = true;
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
}

class ReportBuilder {
public:
    ReportBuilder(std::string check_id, std::string backend) {
        rep_.check_id = std::move(check_id);
        rep_.backend = std::move(backend);
    }

    template <class S>
    static ReportBuilder for_backend(std::string check_id) {
        return ReportBuilder(std::move(check_id), scalar_traits<S>::backend_name());
    }

    ReportBuilder& input(const std::string& key, json v) {
        rep_.inputs[key] = std::move(v);
        return *this;
    }

    ReportBuilder& sub(const std::string& name, bool pass, std::string note = {}) {
        rep_.sub_verdicts.push_back({name, pass, std::move(note)});
        return *this;
    }

    ReportBuilder& witness(const std::string& key, json v) {
        rep_.witnesses[key] = std::move(v);
        return *this;
    }

    ReportBuilder& counterexample(const std::string& key, json v) {
        rep_.counterexample[key] = std::move(v);
        return *this;
    }

    ReportBuilder& degenerate(const std::string& note) {
        rep_.degenerate_sample = true;
        rep_.witnesses["degenerate"] = note;
        return *this;
    }

    ReportBuilder& downgrade() {
        rep_.backend_downgrade = true;
        return *this;
    }

    bool all_pass() const {
        for (const auto& sv : rep_.sub_verdicts)
            if (!sv.pass) return false;
        return true;
    }

    CheckReport finish() {
        rep_.pass = all_pass();
        return rep_;
    }

private:
    CheckReport rep_;
};

}  // namespace barygeo
