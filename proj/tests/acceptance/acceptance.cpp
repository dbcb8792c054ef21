// Acceptance sweep: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden_runner.hpp"
#include "quadbox/factor_methods.hpp"
#include "quadbox/generate.hpp"
#include "quadbox/oracle.hpp"
#include "quadbox/puzzle.hpp"
#include "quadbox/text.hpp"
#include "quadbox/tile_layout.hpp"

using namespace quadbox;

namespace {

constexpr Int kSweep = 30;

/// Collects the first few counterexamples of one criterion.
class Check {
public:
    void fail(const std::string& what) {
        if (failures_++ < 5) examples_.push_back(what);
    }
    void count() { ++checked_; }

    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream out;
        out << checked_ << " cases";
        if (failures_ > 0) {
            out << ", " << failures_ << " failures";
            for (const auto& e : examples_) out << "; " << e;
        }
        return out.str();
    }

private:
    long checked_ = 0;
    long failures_ = 0;
    std::vector<std::string> examples_;
};

std::string show(const QuadraticPoly& f) { return "(" + std::to_string(f.a()) + "," + std::to_string(f.b()) + "," + std::to_string(f.c()) + ")"; }

template <typename Fn>
void for_each_sweep(Int max_a, Int max_b, Int max_c, Fn fn) {
    for (Int a = -max_a; a <= max_a; ++a) {
        if (a == 0) continue;
        for (Int b = -max_b; b <= max_b; ++b) {
            for (Int c = -max_c; c <= max_c; ++c) fn(QuadraticPoly(a, b, c));
        }
    }
}

void oracle_equivalence(Check& chk) {
    for_each_sweep(kSweep, kSweep, kSweep, [&](const QuadraticPoly& f) {
        chk.count();
        const auto ours = factor_via_theorem(f);
        const auto brute = oracle::brute_force_factor(f);
        if (ours.has_value() != brute.has_value()) return chk.fail("existence differs at " + show(f));
        if (ours && canonicalize(ours->factorization) != *brute) chk.fail("factorization differs at " + show(f));
    });
}

void criterion_matches_discriminant(Check& chk) {
    for_each_sweep(kSweep, kSweep, kSweep, [&](const QuadraticPoly& f) {
        chk.count();
        const auto w = find_pq(f);
        if (w.has_value() != discriminant_is_square(f)) return chk.fail("criterion differs at " + show(f));
        if (w) {
            const Int d = checked::sub(w->p(), w->q());
            if (checked::mul(d, d) != discriminant(f)) chk.fail("(p-q)^2 != b^2-4ac at " + show(f));
        }
    });
}

void cross_strategy(Check& chk) {
    for_each_sweep(kSweep, kSweep, kSweep, [&](const QuadraticPoly& f) {
        const auto t = factor_via_theorem(f);
        if (!t) return;
        chk.count();
        const Factorization want = canonicalize(t->factorization);
        auto agree = [&](const std::optional<Factorization>& got, const char* route) {
            if (!got) return chk.fail(std::string(route) + " found nothing at " + show(f));
            if (canonicalize(*got) != want) return chk.fail(std::string(route) + " disagrees at " + show(f));
            if (expand(*got) != f) chk.fail(std::string(route) + " does not expand back at " + show(f));
        };
        agree(t->factorization, "theorem");
        const auto g = factor_by_grouping(f);
        agree(g ? std::optional(g->factorization) : std::nullopt, "grouping");
        if (f.a() != 1) {
            const auto s = factor_by_scaling(f);
            agree(s ? std::optional(s->factorization) : std::nullopt, "scaling");
        } else {
            agree(factor_monic(f), "monic");
        }
        if (auto ds = try_difference_of_squares(f)) agree(ds, "difference of squares");
        if (auto ps = try_perfect_square(f)) agree(ps, "perfect square");
        const AutoResult automatic = factor_auto(f);
        if (!automatic.factored()) return chk.fail("auto found nothing at " + show(f));
        agree(std::get<Factorization>(automatic.outcome), "auto");
    });
}

void roots_agree(Check& chk) {
    for_each_sweep(kSweep, kSweep, kSweep, [&](const QuadraticPoly& f) {
        const auto ours = roots_via_theorem(f);
        const auto brute = oracle::brute_force_rational_roots(f);
        if (ours.has_value() != brute.has_value()) return chk.fail("root existence differs at " + show(f));
        if (!ours) return;
        chk.count();
        if (evaluate(f, ours->r1()) != Rat(0) || evaluate(f, ours->r2()) != Rat(0))
            return chk.fail("root does not vanish at " + show(f));
        if (*ours != *brute) chk.fail("roots differ from brute force at " + show(f));
    });
}

void reciprocal_equivalence(Check& chk) {
    for_each_sweep(kSweep, kSweep, kSweep, [&](const QuadraticPoly& f) {
        if (f.c() == 0) return;
        chk.count();
        if (find_pq(f).has_value() != find_pq(reciprocal(f)).has_value())
            return chk.fail("reciprocal disagrees at " + show(f));
        if (reciprocal_factorable_equiv(f) != oracle::brute_force_factor(reciprocal(f)).has_value())
            chk.fail("reciprocal_factorable_equiv disagrees with brute force at " + show(f));
    });
}

void eisenstein_excludes_witness(Check& chk) {
    for_each_sweep(kSweep, kSweep, kSweep, [&](const QuadraticPoly& f) {
        const auto e = eisenstein_irreducible(f);
        if (!e) return;
        chk.count();
        if (find_pq(f)) chk.fail("prime " + std::to_string(e->r()) + " certifies factorable " + show(f));
    });
}

std::vector<Rat> reduced_rationals(bool nonzero) {
    std::vector<Rat> out;
    for (Int den = 1; den <= 4; ++den) {
        for (Int num = -6; num <= 6; ++num) {
            if (nonzero && num == 0) continue;
            if (gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
            out.emplace_back(num, den);
        }
    }
    return out;
}

void rational_coefficients(Check& chk) {
    const auto leads = reduced_rationals(true);
    const auto coefs = reduced_rationals(false);
    for (const Rat& a : leads) {
        for (const Rat& b : coefs) {
            for (const Rat& c : coefs) {
                chk.count();
                const RationalQuadratic g(a, b, c);
                const QuadraticPoly cleared = clear_denominators(g);
                const std::string label = print(g);
                const auto direct = rational_has_rational_roots(g);
                if (direct.has_value() != find_pq(cleared).has_value()) {
                    chk.fail("criterion differs for " + label);
                    continue;
                }
                const auto ours = rational_roots(g);
                const auto brute = oracle::brute_force_rational_roots(cleared);
                if (ours.has_value() != direct.has_value() || ours.has_value() != brute.has_value()) {
                    chk.fail("root existence differs for " + label);
                    continue;
                }
                if (!ours) continue;
                if (*ours != *brute) chk.fail("root sets differ for " + label);
                if (evaluate(g, ours->r1()) != Rat(0) || evaluate(g, ours->r2()) != Rat(0))
                    chk.fail("root does not vanish for " + label);
            }
        }
    }
}

void generator(Check& chk) {
    // Every nonzero pair in the box: exactly 100 * 100 = 10,000 exercises.
    for (Int p = -50; p <= 50; ++p) {
        for (Int q = -50; q <= 50; ++q) {
            if (p == 0 || q == 0) continue;
            chk.count();
            const QuadraticPoly f = exercise_from_pair(p, q);
            if (!find_pq(f)) chk.fail("pair exercise not factorable: " + show(f));
            if (!find_pq(reciprocal(f))) chk.fail("reciprocal exercise not factorable: " + show(f));
        }
    }
    // And a seeded batch of 10,000 as the generator emits them.
    const auto batch = generate_exercises(10'000, 50, 2024, ExerciseKind::factorable);
    if (batch != generate_exercises(10'000, 50, 2024, ExerciseKind::factorable)) chk.fail("batch not reproducible");
    for (const QuadraticPoly& f : batch) {
        chk.count();
        if (!find_pq(f)) chk.fail("generated exercise not factorable: " + show(f));
        if (!find_pq(reciprocal(f))) chk.fail("reciprocal of generated exercise not factorable: " + show(f));
    }
}

PuzzleState build_board(const QuadraticPoly& target, const Layout& layout) {
    PuzzleState s = PuzzleState::start(target);
    for (std::size_t i = 0; i < layout.rows().size(); ++i) {
        for (std::size_t j = 0; j < layout.cols().size(); ++j) {
            PlacementResult r = validate_placement(s, layout.cell(i, j), {static_cast<int>(i), static_cast<int>(j)});
            if (auto* rej = std::get_if<PlacementRejection>(&r)) throw std::runtime_error(rej->message());
            s = std::get<PuzzleState>(std::move(r));
        }
    }
    return s;
}

void tile_round_trip(Check& chk) {
    for_each_sweep(12, kSweep, 12, [&](const QuadraticPoly& f) {
        chk.count();
        const auto t = factor_via_theorem(f);
        const auto layouts = enumerate_layouts(f);
        if (layouts.empty() == t.has_value()) return chk.fail("layout existence differs at " + show(f));
        for (const Layout& l : layouts) {
            if (l.signed_counts() != SignedCounts{f.a(), f.b(), f.c()}) return chk.fail("counts differ at " + show(f));
        }
        if (!t) return;
        const Layout layout = layout_from_factorization(t->factorization);
        if (layout.signed_counts() != SignedCounts{f.a(), f.b(), f.c()})
            return chk.fail("layout counts differ at " + show(f));
        try {
            const CompletionResult done = check_completion(build_board(f, layout));
            if (const auto* nc = std::get_if<NotComplete>(&done))
                return chk.fail("board incomplete at " + show(f) + ": " + nc->reason);
            if (std::get<Factorization>(done) != canonicalize(t->factorization))
                chk.fail("board reads a different factorization at " + show(f));
        } catch (const std::exception& e) {
            chk.fail("board construction failed at " + show(f) + ": " + e.what());
        }
    });
}

void cli_goldens(Check& chk) {
    for (const golden::Case& c : golden::load_cases(QUADBOX_GOLDEN_DIR)) {
        chk.count();
        const golden::Outcome got = golden::run(QUADBOX_BIN, c.args);
        if (got.exit_code != c.exit_code) {
            chk.fail(c.name + ": exit " + std::to_string(got.exit_code));
        } else if (got.output != golden::read_file(std::string(QUADBOX_GOLDEN_DIR) + "/" + c.name + ".out")) {
            chk.fail(c.name + ": output differs");
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"oracle equivalence", oracle_equivalence},
        {"pq criterion matches square discriminant", criterion_matches_discriminant},
        {"cross-strategy agreement", cross_strategy},
        {"roots", roots_agree},
        {"reciprocal equivalence", reciprocal_equivalence},
        {"eisenstein implies no witness", eisenstein_excludes_witness},
        {"rational coefficients", rational_coefficients},
        {"generator", generator},
        {"tile round trip", tile_round_trip},
        {"cli goldens", cli_goldens},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Check chk;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(chk);
        } catch (const std::exception& e) {
            chk.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (chk.ok() ? "PASS " : "FAIL ") << name << ": " << chk.summary() << " (" << ms.count() << " ms)"
                  << std::endl;
        if (!chk.ok()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
