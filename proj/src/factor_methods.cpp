#include "quadbox/factor_methods.hpp"

#include <stdexcept>
#include <utility>

namespace quadbox {

namespace {

// Appends a signed term to a compact expression; zero terms are dropped.
void append_term(std::string& out, Int coef, std::string_view var) {
    if (coef == 0) return;
    if (coef < 0) {
        out += '-';
    } else if (!out.empty()) {
        out += '+';
    }
    const Int mag = checked::abs(coef);
    if (var.empty() || mag != 1) out += std::to_string(mag);
    out += var;
}

std::string compact_terms(std::initializer_list<std::pair<Int, std::string_view>> terms) {
    std::string out;
    for (const auto& [coef, var] : terms) append_term(out, coef, var);
    return out.empty() ? "0" : out;
}

std::string kv(std::string_view key, Int value) { return std::string(key) + "=" + std::to_string(value); }

[[noreturn]] void proof_violation(const std::string& what) {
    throw std::logic_error("factor construction invariant violated: " + what);
}

// The four integers of the general construction, before canonicalization.
struct Construction {
    Int p1, p2, q1, q2;
};

Construction construct_from_witness(const QuadraticPoly& f, const PQWitness& w) {
    const Int a = f.a();
    const Int p = w.p();
    const Int q = w.q();
    Construction k{};
    if (p == 0) {
        k.p1 = a;
        k.q1 = 1;
        k.q2 = 0;
    } else {
        k.p1 = gcd(p, a);
        k.q1 = a / k.p1;
        k.q2 = p / k.p1;
    }
    if (q % k.q1 != 0) proof_violation("q1 does not divide q");
    k.p2 = q / k.q1;
    if (checked::mul(k.p2, k.q2) != f.c()) proof_violation("p2 q2 != c");
    return k;
}

Factorization to_factorization(const Construction& k) { return {{k.p1, k.p2}, {k.q1, k.q2}}; }

std::string witness_state(const QuadraticPoly& f, const PQWitness& w) {
    return "pq=" + std::to_string(checked::mul(f.a(), f.c())) + ", p+q=" + std::to_string(f.b()) + ": " +
           kv("p", w.p()) + ", " + kv("q", w.q());
}

// A^2 for A > 0, or nullopt.
std::optional<Int> positive_root(Int n) {
    if (n <= 0 || !is_perfect_square(n)) return std::nullopt;
    return isqrt(n);
}

AutoResult irreducible_outcome(const QuadraticPoly& f, Method method) {
    IrreducibleReport report{discriminant(f), eisenstein_irreducible(f)};
    MethodTrace trace{method, {}};
    trace.steps.push_back({"witness", "no p,q with pq=" + std::to_string(checked::mul(f.a(), f.c())) +
                                          ", p+q=" + std::to_string(f.b())});
    trace.steps.push_back({"discriminant", std::to_string(report.discriminant) + " is not a square"});
    if (report.eisenstein) trace.steps.push_back({"eisenstein", kv("r", report.eisenstein->r())});
    return {report, std::move(trace)};
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::theorem: return "theorem";
        case Method::grouping: return "grouping";
        case Method::monic: return "monic";
        case Method::scaling: return "scaling";
        case Method::diff_squares: return "diff_squares";
        case Method::perfect_square: return "perfect_square";
    }
    throw std::logic_error("unknown method");
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : {Method::theorem, Method::grouping, Method::monic, Method::scaling, Method::diff_squares,
                     Method::perfect_square}) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

std::string compact_linear(const LinearPoly& l) {
    return compact_terms({{l.lead(), "x"}, {l.const_term(), ""}});
}

std::string compact_factorization(const Factorization& fac) {
    return "(" + compact_linear(fac.first) + ")(" + compact_linear(fac.second) + ")";
}

std::optional<FactorResult> factor_via_theorem(const QuadraticPoly& f) {
    const auto w = find_pq(f);
    if (!w) return std::nullopt;
    const Construction k = construct_from_witness(f, *w);

    MethodTrace trace{Method::theorem, {}};
    trace.steps.push_back({"witness", witness_state(f, *w)});
    if (w->p() == 0) {
        trace.steps.push_back({"p=0 branch", kv("p1", k.p1) + ", " + kv("q1", k.q1) + ", " + kv("q2", k.q2)});
    } else {
        trace.steps.push_back({"p1=gcd(p,a)", kv("p1", k.p1)});
        trace.steps.push_back({"q1=a/p1, q2=p/p1", kv("q1", k.q1) + ", " + kv("q2", k.q2)});
    }
    trace.steps.push_back({"p2=q/q1", kv("p2", k.p2)});
    const Factorization raw = to_factorization(k);
    trace.steps.push_back({"factor", compact_factorization(raw)});
    return FactorResult{canonicalize(raw), std::move(trace)};
}

std::optional<RootPair> roots_via_theorem(const QuadraticPoly& f) {
    const auto w = find_pq(f);
    if (!w) return std::nullopt;
    return RootPair(Rat(checked::neg(w->p()), f.a()), Rat(checked::neg(w->q()), f.a()));
}

std::optional<FactorResult> factor_by_grouping(const QuadraticPoly& f) {
    // i) the pair (p, q)
    const auto w = find_pq(f);
    if (!w) return std::nullopt;
    const Int a = f.a();
    const Int c = f.c();

    // ii) ax^2 + px + qx + c
    MethodTrace trace{Method::grouping, {}};
    trace.steps.push_back({"split", compact_terms({{a, "x^2"}, {w->p(), "x"}, {w->q(), "x"}, {c, ""}})});

    // iii) ax^2 + px = p1 x (q1 x + q2), iv) qx + c = p2 (q1 x + q2)
    const Construction k = construct_from_witness(f, *w);
    if (checked::mul(k.p1, k.q1) != a || checked::mul(k.p1, k.q2) != w->p())
        proof_violation("first group does not factor as p1 x (q1 x + q2)");
    if (checked::mul(k.p2, k.q1) != w->q() || checked::mul(k.p2, k.q2) != c)
        proof_violation("second group does not factor as p2 (q1 x + q2)");
    const std::string common = "(" + compact_linear({k.q1, k.q2}) + ")";
    std::string grouped = compact_terms({{k.p1, "x"}}) + common;
    if (k.p2 != 0) {
        grouped += k.p2 < 0 ? "-" : "+";
        if (checked::abs(k.p2) != 1) grouped += std::to_string(checked::abs(k.p2));
        grouped += common;
    }
    trace.steps.push_back({"group", grouped});

    // v) (p1 x + p2)(q1 x + q2)
    const Factorization raw = to_factorization(k);
    trace.steps.push_back({"distribute", compact_factorization(raw)});
    return FactorResult{canonicalize(raw), std::move(trace)};
}

std::optional<Factorization> factor_monic(const QuadraticPoly& f) {
    if (f.a() != 1) throw std::invalid_argument("monic method requires a=1");
    const auto w = find_pq(f);
    if (!w) return std::nullopt;
    return canonicalize({{1, w->p()}, {1, w->q()}});
}

std::optional<FactorResult> factor_by_scaling(const QuadraticPoly& f) {
    const Int a = f.a();
    if (a == 1) throw std::invalid_argument("scaling method requires a not in {0, 1}");
    const Int b = f.b();
    const Int ac = checked::mul(a, f.c());

    MethodTrace trace{Method::scaling, {}};
    const std::string a_str = std::to_string(a);
    trace.steps.push_back(
        {"multiply by a",
         "(" + compact_terms({{checked::mul(a, a), "x^2"}, {checked::mul(a, b), "x"}, {ac, ""}}) + ")/" + a_str});
    trace.steps.push_back({"substitute y=" + compact_terms({{a, "x"}}),
                           "(" + compact_terms({{1, "y^2"}, {b, "y"}, {ac, ""}}) + ")/" + a_str});

    const auto monic = factor_monic(QuadraticPoly(1, b, ac));
    if (!monic) return std::nullopt;
    // factor_monic hands back (y + p)(y + q) with p <= q after canonical ordering.
    Int p = monic->first.const_term();
    Int q = monic->second.const_term();
    if (p > q) std::swap(p, q);
    trace.steps.push_back({"factor in y", "(" + compact_terms({{1, "y"}, {p, ""}}) + ")(" +
                                               compact_terms({{1, "y"}, {q, ""}}) + ")/" + a_str});
    trace.steps.push_back({"back-substitute", "(" + compact_terms({{a, "x"}, {p, ""}}) + ")(" +
                                                  compact_terms({{a, "x"}, {q, ""}}) + ")/" + a_str});

    // d = gcd(a, p) goes into (ax + p), the cofactor a/d into (ax + q).
    const Int d = gcd(a, p);
    const Int cofactor = a / d;
    if (q % cofactor != 0) proof_violation("a/gcd(a,p) does not divide q");
    const Factorization raw{{a / d, p / d}, {a / cofactor, q / cofactor}};
    if (expand(raw) != f) proof_violation("scaled factors do not expand to the input");
    trace.steps.push_back({"divide by " + std::to_string(d) + " and " + std::to_string(cofactor),
                           compact_factorization(raw)});
    return FactorResult{canonicalize(raw), std::move(trace)};
}

std::optional<Factorization> try_difference_of_squares(const QuadraticPoly& f) {
    if (f.b() != 0) return std::nullopt;
    const auto A = positive_root(f.a());
    if (!A || f.c() > 0 || !is_perfect_square(checked::neg(f.c()))) return std::nullopt;
    const Int C = isqrt(checked::neg(f.c()));
    if (gcd(*A, C) != 1) return std::nullopt;
    return canonicalize({{*A, checked::neg(C)}, {*A, C}});
}

std::optional<Factorization> try_perfect_square(const QuadraticPoly& f) {
    const auto A = positive_root(f.a());
    if (!A || !is_perfect_square(f.c())) return std::nullopt;
    const Int B = isqrt(f.c());
    if (gcd(*A, B) != 1) return std::nullopt;
    const Int middle = checked::mul(2, checked::mul(*A, B));
    if (f.b() == middle) return canonicalize({{*A, B}, {*A, B}});
    if (f.b() == checked::neg(middle)) return canonicalize({{*A, checked::neg(B)}, {*A, checked::neg(B)}});
    return std::nullopt;
}

std::optional<EisensteinWitness> eisenstein_irreducible(const QuadraticPoly& f) {
    if (f.b() == 0 || f.c() == 0) return std::nullopt;
    for (Int r : divisors(gcd(f.b(), f.c()))) {
        if (!is_prime(r)) continue;
        if (f.a() % r != 0 && f.c() % checked::mul(r, r) != 0) return EisensteinWitness(r);
    }
    return std::nullopt;
}

bool reciprocal_factorable_equiv(const QuadraticPoly& f) {
    const QuadraticPoly rec = reciprocal(f);
    const bool forward = find_pq(f).has_value();
    if (forward != find_pq(rec).has_value()) proof_violation("reciprocal criterion disagrees");
    return forward;
}

QuadraticPoly clear_denominators(const RationalQuadratic& g) {
    using checked::mul;
    return {mul(g.a1(), mul(g.b2(), g.c2())), mul(g.a2(), mul(g.b1(), g.c2())), mul(g.a2(), mul(g.b2(), g.c1()))};
}

std::optional<PQWitness> rational_has_rational_roots(const RationalQuadratic& g) {
    using checked::mul;
    const Int product = mul(mul(mul(g.a1(), g.a2()), mul(g.b2(), g.b2())), mul(g.c1(), g.c2()));
    const Int sum = mul(g.b1(), mul(g.a2(), g.c2()));
    return find_pair(product, sum);
}

std::optional<RootPair> rational_roots(const RationalQuadratic& g) {
    const auto w = rational_has_rational_roots(g);
    if (!w) return std::nullopt;
    const Int lead = checked::mul(g.a1(), checked::mul(g.b2(), g.c2()));
    return RootPair(Rat(checked::neg(w->p()), lead), Rat(checked::neg(w->q()), lead));
}

namespace {

AutoResult perfect_square_outcome(const Factorization& sq) {
    const Int A = sq.first.lead();
    const Int B = sq.first.const_term();
    MethodTrace trace{Method::perfect_square, {}};
    const std::string ax = "(" + compact_terms({{A, "x"}}) + ")";
    const std::string bb = "(" + std::to_string(checked::abs(B)) + ")";
    trace.steps.push_back({"match", ax + "^2" + (B < 0 ? "-" : "+") + "2" + ax + bb + "+" + bb + "^2"});
    trace.steps.push_back({"factor", compact_factorization(sq)});
    return {sq, std::move(trace)};
}

AutoResult diff_squares_outcome(const Factorization& ds) {
    const Int A = ds.first.lead();
    const Int C = checked::abs(ds.first.const_term());
    MethodTrace trace{Method::diff_squares, {}};
    trace.steps.push_back({"match", "(" + compact_terms({{A, "x"}}) + ")^2-(" + std::to_string(C) + ")^2"});
    trace.steps.push_back({"factor", compact_factorization(ds)});
    return {ds, std::move(trace)};
}

}  // namespace

AutoResult factor_auto(const QuadraticPoly& f) {
    if (auto sq = try_perfect_square(f)) return perfect_square_outcome(*sq);
    if (auto ds = try_difference_of_squares(f)) return diff_squares_outcome(*ds);
    if (auto t = factor_via_theorem(f)) return {t->factorization, std::move(t->trace)};
    return irreducible_outcome(f, Method::theorem);
}

AutoResult factor_with_method(const QuadraticPoly& f, Method method) {
    auto wrap = [&](std::optional<FactorResult> r) -> AutoResult {
        if (!r) return irreducible_outcome(f, method);
        return {r->factorization, std::move(r->trace)};
    };
    switch (method) {
        case Method::theorem: return wrap(factor_via_theorem(f));
        case Method::grouping: return wrap(factor_by_grouping(f));
        case Method::scaling: return wrap(factor_by_scaling(f));
        case Method::monic: {
            const auto fac = factor_monic(f);
            if (!fac) return irreducible_outcome(f, method);
            const auto w = find_pq(f);
            MethodTrace trace{Method::monic, {}};
            trace.steps.push_back({"witness", witness_state(f, *w)});
            trace.steps.push_back({"factor", "(" + compact_terms({{1, "x"}, {w->p(), ""}}) + ")(" +
                                                 compact_terms({{1, "x"}, {w->q(), ""}}) + ")"});
            return {*fac, std::move(trace)};
        }
        case Method::diff_squares: {
            const auto ds = try_difference_of_squares(f);
            if (!ds) throw std::invalid_argument("polynomial is not a difference of coprime squares");
            return diff_squares_outcome(*ds);
        }
        case Method::perfect_square: {
            const auto sq = try_perfect_square(f);
            if (!sq) throw std::invalid_argument("polynomial is not a perfect square trinomial");
            return perfect_square_outcome(*sq);
        }
    }
    throw std::logic_error("unknown method");
}

}  // namespace quadbox

