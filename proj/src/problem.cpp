#include "lagmul/problem.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <sstream>

#include "lagmul/complexes.hpp"
#include "lagmul/series.hpp"

namespace lagmul {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

bool is_reserved(const std::string& s) {
    if (s == "x0") return true;
    return s.size() == 2 && s[0] == 'y' && s[1] >= '1' && s[1] <= '9';
}

/// Dimensions stay well under 2^53 at desk scale, but the report contract
/// says: emit as decimal string above 2^53.
Json json_count(const BigInt& v) {
    static const BigInt limit = BigInt(1) << 53;
    if (v >= -limit && v <= limit)
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json smooth_ci_json(const SmoothCiResult& r) {
    Json j;
    j["ok"] = r.ok;
    j["empty_scheme"] = r.empty_scheme;
    j["diagnostic"] = r.diagnostic;
    return j;
}

Json hypotheses_json(const HypothesisReport& rep) {
    Json j;
    j["h1"] = smooth_ci_json(rep.h1);
    j["h2"] = smooth_ci_json(rep.h2);
    j["h3"] = smooth_ci_json(rep.h3);
    j["h4"] = rep.h4;
    j["h4_diagnostic"] = rep.h4_diagnostic;
    j["all_pass"] = rep.all_pass();
    j["note"] = "scheme-theoretic certificates only";
    return j;
}

void echo_system(Json& rep, const ConstrainedSystem& sys) {
    rep["field"] = Json{{"characteristic", sys.ring->field.characteristic()}};
    rep["order"] = to_string(sys.ring->order.kind);
    rep["variables"] = sys.ring->vars;
    rep["objective"] = sys.objective.to_string();
    Json cons = Json::array();
    for (const auto& c : sys.constraints) cons.push_back(c.to_string());
    rep["constraints"] = cons;
    rep["n"] = sys.n();
    rep["r"] = sys.r();
    rep["degrees"] = sys.degrees();
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        out *= BigInt(n - i);
        out /= BigInt(i + 1);
    }
    return out;
}

struct MethodFlags {
    bool grobner = false, jacobian = false, formula = false;
};

MethodFlags parse_method(const std::string& method) {
    if (method == "all") return {true, true, true};
    if (method == "grobner") return {true, false, false};
    if (method == "jacobian") return {false, true, false};
    if (method == "formula") return {false, false, true};
    throw Error("unknown method '" + method +
                "' (expected all, grobner, jacobian, or formula)");
}

struct MilnorValues {
    std::optional<std::size_t> milnor;
    std::optional<std::size_t> lagrange;
    std::optional<BigInt> predicted;
    std::vector<std::string> warnings;
};

MilnorValues compute_milnor_values(const ConstrainedSystem& sys,
                                   MethodFlags want, bool hypotheses_pass) {
    MilnorValues v;
    if (want.grobner) {
        try {
            v.milnor = milnor_sum(sys);
        } catch (const NonIsolatedCritical& e) {
            v.warnings.push_back(std::string("milnor_sum: ") + e.what());
        }
    }
    if (want.jacobian) {
        try {
            v.lagrange = lagrange_jacobian_dimension(sys);
        } catch (const NonIsolatedCritical& e) {
            v.warnings.push_back(
                std::string("lagrange_jacobian_dimension: ") + e.what());
        }
    }
    if (want.formula) {
        v.predicted = predicted_milnor_sum(sys.n(), sys.degrees());
        if (!hypotheses_pass)
            v.warnings.push_back(
                "closed-form prediction inapplicable: hypotheses fail");
    }
    return v;
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
    ProblemSpec spec;
    bool have_field = false, have_vars = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "field") {
            std::uint64_t p;
            if (!(ls >> p))
                throw ParseError("expected a field characteristic", line_no, 1);
            spec.characteristic = p;
            have_field = true;
        } else if (key == "vars") {
            std::string v;
            while (ls >> v) {
                if (!is_identifier(v))
                    throw ParseError("invalid variable name '" + v + "'",
                                     line_no, 1);
                if (is_reserved(v)) throw ReservedVariable(v);
                if (std::find(spec.vars.begin(), spec.vars.end(), v) !=
                    spec.vars.end())
                    throw ParseError("duplicate variable '" + v + "'",
                                     line_no, 1);
                spec.vars.push_back(v);
            }
            if (spec.vars.empty())
                throw ParseError("vars line lists no variables", line_no, 1);
            have_vars = true;
        } else if (key == "objective") {
            std::string rest;
            std::getline(ls, rest);
            spec.objective_text = rest;
            spec.objective_line = line_no;
        } else if (key == "constraint") {
            std::string rest;
            std::getline(ls, rest);
            spec.constraint_texts.push_back(rest);
            spec.constraint_lines.push_back(line_no);
        } else if (key == "order") {
            std::string o;
            if (!(ls >> o))
                throw ParseError("expected a monomial order name", line_no, 1);
            spec.order = order_kind_from_string(o);
        } else if (key == "truncate") {
            std::uint32_t d;
            if (!(ls >> d))
                throw ParseError("expected a truncation degree", line_no, 1);
            spec.truncation = d;
        } else {
            throw ParseError("unknown directive '" + key + "'", line_no, 1);
        }
    }
    if (!have_field) throw ParseError("missing 'field' line", line_no, 1);
    if (!have_vars) throw ParseError("missing 'vars' line", line_no, 1);
    if (spec.objective_line == 0)
        throw ParseError("missing 'objective' line", line_no, 1);
    if (spec.constraint_texts.empty())
        throw ParseError("at least one 'constraint' line is required",
                         line_no, 1);
    if (spec.constraint_texts.size() >= spec.vars.size())
        throw TooManyConstraints();
    // validate the polynomial syntax eagerly so errors carry file positions
    build_system(spec);
    return spec;
}

ConstrainedSystem build_system(const ProblemSpec& spec,
                               std::optional<OrderKind> order_override) {
    OrderKind kind = order_override.value_or(spec.order);
    RingPtr ring =
        make_ring(Field(spec.characteristic), spec.vars, MonomialOrder{kind});
    Polynomial obj =
        parse_polynomial(spec.objective_text, ring, spec.objective_line);
    std::vector<Polynomial> cons;
    for (std::size_t i = 0; i < spec.constraint_texts.size(); ++i)
        cons.push_back(parse_polynomial(spec.constraint_texts[i], ring,
                                        spec.constraint_lines[i]));
    return ConstrainedSystem::make(ring, std::move(obj), std::move(cons));
}

Json run_check(const ProblemSpec& spec,
               std::optional<OrderKind> order_override) {
    ConstrainedSystem sys = build_system(spec, order_override);
    Json rep;
    rep["status"] = "ok";
    echo_system(rep, sys);
    rep["hypotheses"] = hypotheses_json(check_hypotheses(sys));
    rep["affine_smooth_complete_intersection"] =
        affine_smooth_complete_intersection(sys);
    return rep;
}

Json run_milnor(const ProblemSpec& spec, const std::string& method,
                std::optional<OrderKind> order_override, bool field_confirm,
                bool include_timings) {
    MethodFlags want = parse_method(method);
    auto t0 = std::chrono::steady_clock::now();
    ConstrainedSystem sys = build_system(spec, order_override);

    Json rep;
    rep["status"] = "ok";
    echo_system(rep, sys);
    HypothesisReport hyp = check_hypotheses(sys);
    rep["hypotheses"] = hypotheses_json(hyp);
    auto t1 = std::chrono::steady_clock::now();

    MilnorValues v = compute_milnor_values(sys, want, hyp.all_pass());
    auto t2 = std::chrono::steady_clock::now();

    if (v.milnor) rep["milnor_sum"] = *v.milnor;
    if (v.lagrange) rep["lagrange_jacobian_dimension"] = *v.lagrange;
    if (v.predicted) rep["predicted_milnor_sum"] = json_count(*v.predicted);

    Json agree;
    bool disagreement = false;
    if (v.milnor && v.lagrange) {
        bool ok = *v.milnor == *v.lagrange;
        agree["grobner_jacobian"] = ok;
        if (!ok) disagreement = true;
    }
    if (v.milnor && v.predicted) {
        bool ok = BigInt(*v.milnor) == *v.predicted;
        agree["grobner_formula"] = ok;
        if (!ok && hyp.all_pass()) disagreement = true;
    }
    if (v.lagrange && v.predicted) {
        bool ok = BigInt(*v.lagrange) == *v.predicted;
        agree["jacobian_formula"] = ok;
        if (!ok && hyp.all_pass()) disagreement = true;
    }
    if (!agree.is_null()) rep["agreement"] = agree;
    rep["disagreement"] = disagreement;

    if (field_confirm && spec.characteristic != 0) {
        ProblemSpec qspec = spec;
        qspec.characteristic = 0;
        ConstrainedSystem qsys = build_system(qspec, order_override);
        MilnorValues qv = compute_milnor_values(
            qsys, want, check_hypotheses(qsys).all_pass());
        Json conf;
        conf["characteristic"] = 0;
        bool matches = true;
        if (qv.milnor) {
            conf["milnor_sum"] = *qv.milnor;
            matches = matches && v.milnor && *qv.milnor == *v.milnor;
        }
        if (qv.lagrange) {
            conf["lagrange_jacobian_dimension"] = *qv.lagrange;
            matches = matches && v.lagrange && *qv.lagrange == *v.lagrange;
        }
        if (qv.predicted) {
            conf["predicted_milnor_sum"] = json_count(*qv.predicted);
            matches = matches && v.predicted && *qv.predicted == *v.predicted;
        }
        conf["matches"] = matches;
        rep["field_confirmation"] = conf;
    }

    if (!v.warnings.empty()) {
        rep["warnings"] = v.warnings;
        rep["status"] = "computed_with_warnings";
    }
    if (include_timings) {
        auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(b - a)
                .count();
        };
        rep["timings_ms"] =
            Json{{"hypotheses", ms(t0, t1)}, {"dimensions", ms(t1, t2)}};
    }
    return rep;
}

Json run_complex_verification(const ProblemSpec& spec,
                              std::optional<std::uint32_t> truncation,
                              std::optional<OrderKind> order_override) {
    ConstrainedSystem sys = build_system(spec, order_override);
    std::uint32_t trunc =
        truncation.value_or(spec.truncation.value_or(default_truncation(sys)));

    Json rep;
    rep["status"] = "ok";
    echo_system(rep, sys);
    rep["truncation"] = trunc;

    std::vector<std::uint32_t> degs = sys.degrees();
    auto describe = [](const GradedFreeComplex& c) {
        Json j;
        std::vector<std::size_t> ranks;
        for (std::size_t p = 0; p <= c.length(); ++p)
            ranks.push_back(c.rank(p));
        j["ranks"] = ranks;
        j["composites_vanish"] = c.composites_vanish();
        return j;
    };

    PolyMatrix aug = augmented_jacobian(sys);
    GradedFreeComplex en = eagon_northcott(aug, degs);
    Json en_json = describe(en);
    bool ranks_ok = en.rank(0) == 1;
    for (std::size_t p = 1; p <= en.length(); ++p) {
        BigInt expect = binomial(sys.n(), p + sys.r()) *
                        binomial(p + sys.r() - 1, sys.r());
        ranks_ok = ranks_ok && BigInt(en.rank(p)) == expect;
    }
    en_json["rank_formula_ok"] = ranks_ok;
    rep["eagon_northcott"] = en_json;

    GradedFreeComplex kos = koszul_complex(sys.constraints);
    rep["koszul"] = describe(kos);

    GradedFreeComplex total = tensor_total(en, kos);
    Json total_json = describe(total);
    // the presentation ideal of the end of the total complex is I + J
    {
        const PolyMatrix& d1 = total.differentials[0];
        std::vector<Polynomial> image;
        for (std::size_t j = 0; j < d1.cols; ++j)
            if (!d1.at(0, j).is_zero()) image.push_back(d1.at(0, j));
        IdealWithBasis from_complex(sys.ring, image);
        total_json["h0_presentation_matches"] =
            from_complex.reduced_basis() ==
            critical_ideal(sys).reduced_basis();
    }
    rep["total"] = total_json;

    HypothesisReport hyp = check_hypotheses(sys);
    rep["hypotheses"] = hypotheses_json(hyp);
    if (!hyp.all_pass()) {
        rep["graded"] = Json{{"skipped", "hypotheses fail"}};
        rep["status"] = "computed_with_warnings";
        return rep;
    }

    Json graded;
    try {
        H0HilbertCheck check = h0_hilbert_check(sys, trunc);
        graded["total_dimension"] = check.total_dimension;
        graded["milnor_sum"] = check.milnor;
        graded["per_degree_match"] = check.per_degree_match;
        graded["totals_match"] = check.totals_match;
        graded["series_identity"] = check.series_identity;
        graded["ok"] = check.ok;

        // leading-form complexes: gradedness and higher-strand vanishing
        std::vector<Polynomial> leading;
        for (const auto& c : sys.constraints)
            leading.push_back(c.leading_form());
        std::vector<Polynomial> leading_all = leading;
        leading_all.push_back(sys.objective.leading_form());
        GradedFreeComplex lf_total = tensor_total(
            eagon_northcott(jacobian_matrix(leading_all), degs),
            koszul_complex(leading));
        graded["is_graded"] = lf_total.is_graded();
        bool vanish = true;
        long first_nonzero_degree = -1;
        for (std::uint32_t d = 0; d <= trunc && vanish; ++d) {
            auto h = strand_homology(lf_total, d);
            for (std::size_t p = 1; p < h.size(); ++p) {
                if (h[p] != 0) {
                    vanish = false;
                    first_nonzero_degree = d;
                    break;
                }
            }
        }
        graded["higher_strand_homology_vanishes"] = vanish;
        if (!vanish)
            graded["first_nonvanishing_degree"] = first_nonzero_degree;
        if (!check.ok || !vanish) rep["status"] = "computed_with_warnings";
    } catch (const TruncationTooSmall& e) {
        graded["error"] = e.what();
        graded["offending_degree"] = e.degree;
        rep["status"] = "computed_with_warnings";
    }
    rep["graded"] = graded;
    return rep;
}

namespace {

Polynomial random_dense(const RingPtr& ring, std::uint32_t degree,
                        std::mt19937_64& rng) {
    const std::uint64_t p = ring->field.characteristic();
    for (;;) {
        std::vector<Term> terms;
        for (std::uint32_t d = 0; d <= degree; ++d) {
            for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
                std::int64_t c = p > 0
                                     ? std::int64_t(rng() % p)
                                     : std::int64_t(rng() % 19) - 9;
                terms.push_back({m, FieldElement(ring->field, c)});
            }
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        if (!f.is_zero() && f.total_degree() == degree) return f;
    }
}

}  // namespace

Json run_random_harness(const HarnessConfig& cfg) {
    if (cfg.n_max < 2 || cfg.r_max < 1 || cfg.d_max < 1 || cfg.count < 1)
        throw Error("harness bounds must allow n >= 2, r >= 1, d >= 1");
    Field field(cfg.characteristic);
    std::mt19937_64 rng(cfg.seed);

    std::size_t generated = 0, passed = 0, agreements = 0, disagreements = 0;
    std::size_t aborted = 0, oracle_checked = 0, oracle_agreements = 0;
    Json dumps = Json::array();
    const std::size_t max_attempts = 400 * cfg.count;

    while (passed < cfg.count && generated < max_attempts) {
        ++generated;
        std::size_t n = 2 + rng() % (cfg.n_max - 1);
        std::size_t r = 1 + rng() % std::min(cfg.r_max, n - 1);
        std::vector<std::string> vars;
        for (std::size_t i = 1; i <= n; ++i)
            vars.push_back("x" + std::to_string(i));
        RingPtr ring = make_ring(field, vars);

        std::vector<Polynomial> cons;
        for (std::size_t i = 0; i < r; ++i)
            cons.push_back(random_dense(ring, 1 + rng() % cfg.d_max, rng));
        Polynomial obj = random_dense(ring, 1 + rng() % cfg.d_max, rng);

        try {
            ConstrainedSystem sys =
                ConstrainedSystem::make(ring, obj, cons);
            if (!check_hypotheses(sys).all_pass()) continue;
            ++passed;

            std::size_t m = milnor_sum(sys);
            std::size_t l = lagrange_jacobian_dimension(sys);
            BigInt pred = predicted_milnor_sum(sys.n(), sys.degrees());
            bool agree = m == l && BigInt(m) == pred;
            if (agree) {
                ++agreements;
            } else {
                ++disagreements;
                Json dump;
                dump["instance"] = passed - 1;
                dump["objective"] = obj.to_string();
                Json cj = Json::array();
                for (const auto& c : cons) cj.push_back(c.to_string());
                dump["constraints"] = cj;
                dump["milnor_sum"] = m;
                dump["lagrange_jacobian_dimension"] = l;
                dump["predicted_milnor_sum"] = json_count(pred);
                dumps.push_back(dump);
            }

            if (cfg.characteristic > 0) {
                double size = 1;
                for (std::size_t i = 0; i < n; ++i)
                    size *= double(cfg.characteristic);
                if (size <= 1e6) {
                    ++oracle_checked;
                    auto brute = brute_force_critical_points(sys);
                    auto scan =
                        scan_common_zeros(critical_ideal(sys).reduced_basis());
                    if (brute == scan) ++oracle_agreements;
                }
            }
        } catch (const ResourceLimit&) {
            ++aborted;
        } catch (const NonIsolatedCritical&) {
            ++aborted;
        }
    }

    Json rep;
    rep["seed"] = cfg.seed;
    rep["characteristic"] = cfg.characteristic;
    rep["n_max"] = cfg.n_max;
    rep["r_max"] = cfg.r_max;
    rep["d_max"] = cfg.d_max;
    rep["count"] = cfg.count;
    rep["generated"] = generated;
    rep["hypotheses_passed"] = passed;
    rep["aborted"] = aborted;
    rep["agreements"] = agreements;
    rep["disagreements"] = disagreements;
    rep["oracle_checked"] = oracle_checked;
    rep["oracle_agreements"] = oracle_agreements;
    rep["disagreement_dumps"] = dumps;
    rep["disagreement"] =
        disagreements > 0 || oracle_agreements != oracle_checked;
    return rep;
}

bool report_has_disagreement(const Json& report) {
    auto it = report.find("disagreement");
    return it != report.end() && it->is_boolean() && it->get<bool>();
}

}  // namespace lagmul
