#include "quadbox/json_io.hpp"

namespace quadbox::json {

std::string fraction(const Rat& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }

Json poly(const QuadraticPoly& f) { return Json{{"a", f.a()}, {"b", f.b()}, {"c", f.c()}}; }

Json witness(const std::optional<PQWitness>& w) {
    if (!w) return nullptr;
    return Json{{"p", w->p()}, {"q", w->q()}};
}

Json factors(const Factorization& fac) {
    auto one = [](const LinearPoly& l) { return Json{{"lead", l.lead()}, {"const", l.const_term()}}; };
    return Json::array({one(fac.first), one(fac.second)});
}

Json roots(const std::optional<RootPair>& r) {
    if (!r) return nullptr;
    return Json::array({fraction(r->r1()), fraction(r->r2())});
}

Json certificate(const IrreducibleReport& report) {
    if (report.eisenstein) return Json{{"kind", "eisenstein"}, {"prime", report.eisenstein->r()}};
    return Json{{"kind", "nonsquare_discriminant"}, {"value", report.discriminant}};
}

Json layout(const Layout& l) {
    auto segs = [](const std::vector<Segment>& v) {
        Json out = Json::array();
        for (const Segment& s : v) out.push_back(Json{{"len", std::string(length_name(s.length))}, {"sign", s.sign}});
        return out;
    };
    const SignedCounts counts = l.signed_counts();
    return Json{{"rows", segs(l.rows())},
                {"cols", segs(l.cols())},
                {"counts", Json{{"x2", counts.x_square}, {"x", counts.x}, {"unit", counts.unit}}}};
}

Json inventory(const PuzzleState& s) {
    Json out = Json::array();
    for (const auto& [key, count] : s.inventory()) {
        out.push_back(Json{{"kind", std::string(kind_name(key.first))}, {"sign", key.second}, {"count", count}});
    }
    return out;
}

Json placed(const PuzzleState& s) {
    Json out = Json::array();
    for (const auto& [pos, card] : s.placed()) {
        out.push_back(Json{{"row", pos.row},
                           {"col", pos.col},
                           {"kind", std::string(kind_name(card.card.kind))},
                           {"sign", card.card.sign},
                           {"height", std::string(length_name(card.height))},
                           {"width", std::string(length_name(card.width))}});
    }
    return out;
}

Json factorization_report(const QuadraticPoly& f, const std::optional<Factorization>& fac,
                          std::optional<IrreducibleReport> irreducible, const MethodTrace& trace, bool with_trace) {
    Json out;
    out["input"] = poly(f);
    out["pq"] = witness(find_pq(f));
    out["factors"] = fac ? factors(*fac) : Json(nullptr);
    out["roots"] = roots(roots_via_theorem(f));
    out["method"] = std::string(method_name(trace.method));
    if (with_trace) {
        Json steps = Json::array();
        for (const TraceStep& s : trace.steps) steps.push_back(Json{{"label", s.label}, {"state", s.state}});
        out["trace"] = steps;
    }
    out["certificate"] = irreducible ? certificate(*irreducible) : Json(nullptr);
    return out;
}

}  // namespace quadbox::json
