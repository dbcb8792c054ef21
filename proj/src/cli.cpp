#include "quadbox/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "quadbox/factor_methods.hpp"
#include "quadbox/generate.hpp"
#include "quadbox/json_io.hpp"
#include "quadbox/session_service.hpp"
#include "quadbox/text.hpp"
#include "quadbox/tile_layout.hpp"

namespace quadbox {

namespace {

using json::Json;

struct Input {
    QuadraticPoly poly;                           // integer polynomial the methods run on
    std::optional<RationalQuadratic> rational;    // set when the text had fractions
    Rat scale{1};                                 // input = scale * poly
};

Input resolve(const std::string& text) {
    const ParsedPoly parsed = parse(text);
    if (const auto* f = std::get_if<QuadraticPoly>(&parsed)) return {*f, std::nullopt, Rat(1)};
    const auto& g = std::get<RationalQuadratic>(parsed);
    const Int den = checked::mul(g.a2(), checked::mul(g.b2(), g.c2()));
    return {clear_denominators(g), g, Rat(1, den)};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string certificate_text(const IrreducibleReport& r) {
    if (r.eisenstein) return "eisenstein prime " + std::to_string(r.eisenstein->r());
    return "nonsquare discriminant " + std::to_string(r.discriminant);
}

Json rational_note(const Input& in) {
    return Json{{"text", print(*in.rational)}, {"scale", json::fraction(in.scale)}};
}

int cmd_factor(const Input& in, const std::string& route, bool trace, bool as_json, bool strict,
               std::ostream& out) {
    std::optional<Method> method;
    if (route != "auto") method = method_from_name(route);
    const AutoResult r = method ? factor_with_method(in.poly, *method) : factor_auto(in.poly);

    std::optional<Factorization> fac;
    std::optional<IrreducibleReport> report;
    if (r.factored()) {
        fac = std::get<Factorization>(r.outcome);
    } else {
        report = std::get<IrreducibleReport>(r.outcome);
    }

    if (as_json) {
        Json j = json::factorization_report(in.poly, fac, report, r.trace, trace);
        if (in.rational) j["rational"] = rational_note(in);
        emit(out, j);
    } else {
        if (trace) {
            out << "method: " << method_name(r.trace.method) << '\n';
            for (const TraceStep& s : r.trace.steps) out << "  " << s.label << ": " << s.state << '\n';
        }
        if (fac) {
            if (in.rational) out << in.scale.str();
            out << print(*fac) << '\n';
        } else {
            out << "irreducible: " << certificate_text(*report) << '\n';
        }
    }
    return (strict && !fac) ? kExitIrreducible : kExitOk;
}

int cmd_pq(const Input& in, bool as_json, std::ostream& out) {
    const auto w = in.rational ? rational_has_rational_roots(*in.rational) : find_pq(in.poly);
    if (as_json) {
        Json j{{"input", json::poly(in.poly)}, {"pq", json::witness(w)}};
        if (in.rational) j["rational"] = rational_note(in);
        emit(out, j);
    } else if (w) {
        out << "p = " << w->p() << ", q = " << w->q() << '\n';
    } else {
        out << "none\n";
    }
    return kExitOk;
}

int cmd_roots(const Input& in, bool as_json, std::ostream& out) {
    const auto r = in.rational ? rational_roots(*in.rational) : roots_via_theorem(in.poly);
    if (as_json) {
        Json j{{"input", json::poly(in.poly)}, {"roots", json::roots(r)}};
        if (in.rational) j["rational"] = rational_note(in);
        emit(out, j);
    } else if (r) {
        out << print(*r) << '\n';
    } else {
        out << "no rational roots\n";
    }
    return kExitOk;
}

int cmd_check(const Input& in, bool as_json, std::ostream& out) {
    const auto w = in.rational ? rational_has_rational_roots(*in.rational) : find_pq(in.poly);
    std::optional<IrreducibleReport> report;
    if (!w) report = IrreducibleReport{discriminant(in.poly), eisenstein_irreducible(in.poly)};
    if (as_json) {
        Json j{{"input", json::poly(in.poly)},
               {"reducible", w.has_value()},
               {"pq", json::witness(w)},
               {"certificate", report ? json::certificate(*report) : Json(nullptr)}};
        if (in.rational) j["rational"] = rational_note(in);
        emit(out, j);
    } else if (w) {
        out << "reducible: p = " << w->p() << ", q = " << w->q() << '\n';
    } else {
        out << "irreducible: " << certificate_text(*report) << '\n';
    }
    return kExitOk;
}

int cmd_layout(const Input& in, bool all, bool as_json, std::ostream& out) {
    std::vector<Layout> layouts;
    if (all) {
        layouts = enumerate_layouts(in.poly);
    } else if (auto t = factor_via_theorem(in.poly)) {
        layouts.push_back(layout_from_factorization(t->factorization));
    }
    if (as_json) {
        if (all) {
            Json arr = Json::array();
            for (const Layout& l : layouts) arr.push_back(json::layout(l));
            emit(out, arr);
        } else {
            emit(out, layouts.empty() ? Json(nullptr) : json::layout(layouts.front()));
        }
        return kExitOk;
    }
    if (layouts.empty()) {
        out << "no layout: " << print(in.poly) << " does not factor over the integers\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < layouts.size(); ++i) {
        if (i > 0) out << '\n';
        out << print(layouts[i].sides()) << '\n' << render_ascii(layouts[i]);
    }
    return kExitOk;
}

int cmd_generate(std::size_t count, Int max_abs, std::uint64_t seed, const std::string& kind, bool as_json,
                 std::ostream& out) {
    const auto polys = generate_exercises(count, max_abs, seed, *exercise_kind_from_name(kind));
    if (as_json) {
        Json arr = Json::array();
        for (const QuadraticPoly& f : polys) {
            Json item = json::poly(f);
            item["text"] = print(f);
            arr.push_back(item);
        }
        emit(out, arr);
    } else {
        for (const QuadraticPoly& f : polys) out << print(f) << '\n';
    }
    return kExitOk;
}

int cmd_serve(int port, long ttl_seconds, std::ostream& out, std::ostream& err) {
    SessionStore store{std::chrono::seconds(ttl_seconds)};
    HttpService http(store);
    const int bound = http.bind("0.0.0.0", port);
    if (bound < 0) {
        err << "error: cannot bind port " << port << '\n';
        return kExitUsage;
    }
    out << "listening on port " << bound << std::endl;
    return http.listen() ? kExitOk : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quadbox: factor integer quadratics through the (p, q) criterion"};
    app.require_subcommand(1);

    std::string poly_text;
    bool as_json = false;

    std::string method = "auto";
    bool trace = false, strict = false;
    auto* factor = app.add_subcommand("factor", "Factor into two integer linear polynomials");
    factor->add_option("poly", poly_text, "Polynomial, e.g. \"3x^2 + 10x + 8\"")->required();
    factor->add_option("--method", method, "Factoring route")
        ->check(CLI::IsMember({"auto", "theorem", "grouping", "monic", "scaling"}));
    factor->add_flag("--trace", trace, "Show each step");
    factor->add_flag("--json", as_json, "JSON output");
    factor->add_flag("--strict", strict, "Exit with status 1 when irreducible");

    auto* pq = app.add_subcommand("pq", "Find p, q with pq = ac and p + q = b");
    pq->add_option("poly", poly_text)->required();
    pq->add_flag("--json", as_json);

    auto* roots = app.add_subcommand("roots", "Rational roots -p/a, -q/a");
    roots->add_option("poly", poly_text)->required();
    roots->add_flag("--json", as_json);

    auto* check = app.add_subcommand("check", "Reducible or irreducible, with a certificate");
    check->add_option("poly", poly_text)->required();
    check->add_flag("--json", as_json);

    bool all = false;
    auto* layout = app.add_subcommand("layout", "Polynomial box diagram");
    layout->add_option("poly", poly_text)->required();
    layout->add_flag("--all", all, "Every layout, one per factorization");
    layout->add_flag("--json", as_json);

    std::size_t count = 10;
    Int max_abs = 9;
    std::uint64_t seed = 1;
    std::string kind = "factorable";
    auto* generate = app.add_subcommand("generate", "Seeded exercise batch");
    generate->add_option("--count", count)->required()->check(CLI::PositiveNumber);
    generate->add_option("--max", max_abs)->required()->check(CLI::Range(Int{1}, Int{1'000'000}));
    generate->add_option("--seed", seed)->required();
    generate->add_option("--kind", kind)->check(CLI::IsMember({"factorable", "irreducible", "mixed"}));
    generate->add_flag("--json", as_json);

    int port = 8080;
    long ttl = 3600;
    auto* serve = app.add_subcommand("serve", "Puzzle session service over HTTP");
    serve->add_option("--port", port)->required()->check(CLI::Range(0, 65535));
    serve->add_option("--session-ttl", ttl, "Seconds of inactivity before a session expires")
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(count, max_abs, seed, kind, as_json, out);
        if (*serve) return cmd_serve(port, ttl, out, err);
        const Input in = resolve(poly_text);
        if (*factor) return cmd_factor(in, method, trace, as_json, strict, out);
        if (*pq) return cmd_pq(in, as_json, out);
        if (*roots) return cmd_roots(in, as_json, out);
        if (*check) return cmd_check(in, as_json, out);
        if (*layout) return cmd_layout(in, all, as_json, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace quadbox
