#include "srsdual/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srsdual/analysis.hpp"
#include "srsdual/decision.hpp"
#include "srsdual/error.hpp"
#include "srsdual/gpcp.hpp"
#include "srsdual/irr_automaton.hpp"
#include "srsdual/rewrite.hpp"
#include "srsdual/trs.hpp"

namespace srsdual::cli {

namespace {

using Report = nlohmann::ordered_json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(std::ostream& out, const Report& rep, bool json) {
    if (json) {
        out << rep.dump(2) << '\n';
        return;
    }
    auto scalar = [](const Report& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& [key, value] : rep.items()) {
        if (value.is_array()) {
            for (const auto& item : value) out << key << ": " << scalar(item) << '\n';
        } else {
            out << key << ": " << scalar(value) << '\n';
        }
    }
}

struct Options {
    std::string format = "text";
    bool chars = false;
    bool json() const { return format == "json"; }
};

Srs load_srs(const std::string& path, const Options& o) {
    return parse_srs(read_file(path), SrsParseOptions{o.chars});
}

SymbolString word_arg(const Srs& srs, const std::string& text, const Options& o) {
    return o.chars ? parse_word_chars(srs.alphabet(), text) : parse_word(srs.alphabet(), text);
}

std::string show_indices(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

Report outcome_report(const Srs& srs, const SearchOutcome& o) {
    Report r;
    r["status"] = to_string(o.status);
    if (o.witness.empty()) {
        r["witness"] = "none";
    } else {
        std::string w;
        for (std::size_t i = 0; i < o.witness.size(); ++i) w += (i ? " | " : "") + srs.show(o.witness[i]);
        r["witness"] = w;
    }
    r["bound"] = o.bound;
    r["examined"] = o.examined;
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"String-rewriting toolkit: normal forms, IRR automata, bounded fixed-point / common-term /\n"
                 "common-equation search, and the GPCP reduction to common terms.",
                 "srsdual"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Report style")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--chars", o.chars, "Treat every character as a symbol (SRS files and word arguments)");

    int status = kTrue;
    std::string srs_path, word, alpha, beta, a1, a2, b1, b2;
    std::size_t max_len = 0, k_max = 4;
    std::optional<std::size_t> budget;
    bool trace = false, dot = false;

    auto* check = app.add_subcommand("check", "Classification and convergence report");
    check->add_option("srs", srs_path, "SRS file")->required();

    auto* norm = app.add_subcommand("normalize", "Normal form of a word");
    norm->add_option("srs", srs_path, "SRS file")->required();
    norm->add_option("word", word, "Word (tokens; eps for the empty word)")->required();
    norm->add_flag("--trace", trace, "Print every rewrite step");
    norm->add_option("--budget", budget, "Step budget (required for non-length-reducing systems)");

    auto* irr = app.add_subcommand("irr", "Export the IRR(R) automaton");
    irr->add_option("srs", srs_path, "SRS file")->required();
    irr->add_flag("--dot", dot, "DOT graph instead of the transition table");

    auto* ct = app.add_subcommand("ct", "Common term: W with alpha W <->* beta W");
    ct->add_option("srs", srs_path)->required();
    ct->add_option("alpha", alpha)->required();
    ct->add_option("beta", beta)->required();

    auto* fp = app.add_subcommand("fp", "Fixed point: W with alpha W <->* W");
    fp->add_option("srs", srs_path)->required();
    fp->add_option("alpha", alpha)->required();

    auto* ce = app.add_subcommand("ce", "Common equation: non-trivial (W1, W2)");
    ce->add_option("srs", srs_path)->required();
    ce->add_option("alpha1", a1)->required();
    ce->add_option("alpha2", a2)->required();
    ce->add_option("beta1", b1)->required();
    ce->add_option("beta2", b2)->required();

    for (auto* sub : {ct, fp, ce}) {
        sub->add_option("--max-len", max_len, "Maximum candidate length")->required();
        sub->add_option("--budget", budget, "Step budget per bounded <-> check, for systems not certified convergent");
    }

    std::string inst_path, out_path, trs_path, term_text, theta1_text, theta2_text;
    auto* gpcp = app.add_subcommand("gpcp", "GPCP instances and the reduction to common terms");
    gpcp->require_subcommand(1);
    auto* gsolve = gpcp->add_subcommand("solve", "Bounded breadth-first solver");
    auto* gencode = gpcp->add_subcommand("encode", "Write the encoded SRS");
    auto* ground = gpcp->add_subcommand("roundtrip", "solve -> witness -> verify -> decode -> compare");
    for (auto* sub : {gsolve, gencode, ground}) sub->add_option("instance", inst_path, "GPCP file")->required();
    gsolve->add_option("--k-max", k_max, "Maximum number of intermediate tiles");
    ground->add_option("--k-max", k_max, "Maximum number of intermediate tiles");
    gencode->add_option("-o,--output", out_path, "Output path (stdout when omitted)");

    auto* trs = app.add_subcommand("trs", "First-order term rewriting");
    trs->require_subcommand(1);
    auto* tnorm = trs->add_subcommand("normalize", "Leftmost-innermost normal form");
    auto* tct = trs->add_subcommand("ct-check", "Does theta1(t) and theta2(t) have equal normal forms?");
    for (auto* sub : {tnorm, tct}) sub->add_option("trs", trs_path, "TRS file")->required();
    tnorm->add_option("term", term_text)->required();
    tnorm->add_option("--budget", budget);
    tct->add_option("--theta1", theta1_text, "e.g. 'x = p(a); y = p(b)'")->required();
    tct->add_option("--theta2", theta2_text)->required();
    tct->add_option("--term", term_text)->required();
    tct->add_option("--budget", budget);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kTrue : kError;
    }

    try {
        Report rep;
        if (check->parsed()) {
            const Srs srs = load_srs(srs_path, o);
            const ClassReport cls = classify(srs);
            const ConvergenceReport conv = check_convergent(srs);
            rep["rules"] = srs.rules().size();
            rep["symbols"] = srs.alphabet().size();
            rep["monadic"] = cls.monadic;
            rep["dwindling"] = cls.dwindling;
            rep["length_reducing"] = cls.length_reducing;
            rep["inter_reduced"] = cls.inter_reduced;
            rep["orthogonal"] = cls.orthogonal;
            rep["critical_pairs"] = critical_pairs(srs).size();
            rep["terminating"] = to_string(conv.terminating);
            rep["locally_confluent"] = to_string(conv.locally_confluent);
            rep["convergent"] = conv.convergent;
            if (conv.unjoinable_pair) {
                rep["unjoinable_peak"] = srs.show(conv.unjoinable_pair->peak);
                rep["unjoinable_left"] = srs.show(conv.unjoinable_pair->left_result);
                rep["unjoinable_right"] = srs.show(conv.unjoinable_pair->right_result);
            }
            status = conv.convergent ? kTrue : kFalse;
        } else if (norm->parsed()) {
            const Srs srs = load_srs(srs_path, o);
            NormalizeOptions no;
            no.budget = budget;
            no.trace = trace;
            try {
                const NormalizeResult res = normalize(srs, word_arg(srs, word, o), no);
                rep["status"] = "normalized";
                rep["normal_form"] = srs.show(res.normal_form);
                rep["steps"] = res.steps;
                if (trace) {
                    Report steps = Report::array();
                    for (const RewriteStep& s : res.trace)
                        steps.push_back(srs.show(s.input) + " => " + srs.show(s.output) + " (rule " +
                                        std::to_string(s.rule) + " at " + std::to_string(s.position) + ")");
                    rep["trace"] = steps;
                    if (res.trace_truncated) rep["trace_truncated"] = true;
                }
            } catch (const BudgetExhausted& e) {
                rep["status"] = "budget-exhausted";
                status = kFalse;
            }
        } else if (irr->parsed()) {
            const Srs srs = load_srs(srs_path, o);
            const IrrAutomaton a = irr_automaton(srs);
            out << (dot ? to_dot(a, srs.alphabet()) : to_table(a, srs.alphabet()));
            return kTrue;
        } else if (ct->parsed() || fp->parsed()) {
            const Srs srs = load_srs(srs_path, o);
            const SearchOptions so{max_len, budget};
            const SearchOutcome res = ct->parsed()
                ? ct_search(CtQuery{srs, word_arg(srs, alpha, o), word_arg(srs, beta, o)}, so)
                : fp_search(srs, word_arg(srs, alpha, o), so);
            rep = outcome_report(srs, res);
            status = res.found() ? kTrue : kFalse;
        } else if (ce->parsed()) {
            const Srs srs = load_srs(srs_path, o);
            const CeQuery q{srs, word_arg(srs, a1, o), word_arg(srs, a2, o), word_arg(srs, b1, o), word_arg(srs, b2, o)};
            const SearchOutcome res = ce_search(q, SearchOptions{max_len, budget});
            rep = outcome_report(srs, res);
            status = res.found() ? kTrue : kFalse;
        } else if (gsolve->parsed()) {
            const GpcpInstance inst = parse_gpcp(read_file(inst_path));
            inst.validate();
            const auto sol = gpcp_brute_force(inst, k_max);
            rep["status"] = sol ? "found" : "exhausted";
            rep["k_max"] = k_max;
            if (sol) {
                rep["indices"] = show_indices(sol->indices);
                rep["match"] = to_string(inst.alphabet, sol->match);
            }
            status = sol ? kTrue : kFalse;
        } else if (gencode->parsed()) {
            const CtEncoding enc = encode_any(parse_gpcp(read_file(inst_path)));
            const std::string text = format_encoding(enc);
            if (out_path.empty()) {
                out << text;
                return kTrue;
            }
            std::ofstream f(out_path, std::ios::binary);
            if (!f || !(f << text)) throw InputError("cannot write '" + out_path + "'");
            rep["output"] = out_path;
            rep["rules"] = enc.srs.rules().size();
            rep["symbols"] = enc.srs.alphabet().size();
            rep["alpha"] = enc.srs.show(enc.alpha);
            rep["beta"] = enc.srs.show(enc.beta);
        } else if (ground->parsed()) {
            const GpcpInstance inst = parse_gpcp(read_file(inst_path));
            inst.validate();
            const CtEncoding enc = encode_any(inst);
            const auto sol = gpcp_brute_force(inst, k_max);
            rep["status"] = sol ? "found" : "exhausted";
            if (!sol) {
                emit(out, rep, o.json());
                return kFalse;
            }
            GpcpSolution encoded = *sol;
            if (enc.binarization) encoded.match = enc.binarization->apply(sol->match);
            const CtWitness w = witness_from_solution(enc, encoded);
            const bool verified = verify_witness(enc, w.word);
            GpcpSolution decoded = solution_from_witness(enc, w.word);
            if (enc.binarization) decoded.match = enc.binarization->invert(decoded.match);
            const bool same = decoded == *sol;
            rep["indices"] = show_indices(sol->indices);
            rep["match"] = to_string(inst.alphabet, sol->match);
            rep["witness"] = enc.srs.show(w.word);
            rep["witness_length"] = w.word.size();
            rep["verified"] = verified;
            rep["decoded_indices"] = show_indices(decoded.indices);
            rep["decoded_match"] = to_string(inst.alphabet, decoded.match);
            rep["decode_matches"] = same;
            status = verified && same ? kTrue : kFalse;
        } else if (tnorm->parsed()) {
            trs::TrsLite t = trs::parse_trs(read_file(trs_path));
            const trs::Term term = trs::parse_term(term_text, t.signature);
            try {
                rep["status"] = "normalized";
                rep["normal_form"] = trs::to_string(trs::normalize_term(t, term, budget.value_or(100'000)));
            } catch (const BudgetExhausted&) {
                rep["status"] = "budget-exhausted";
                status = kFalse;
            }
        } else if (tct->parsed()) {
            trs::TrsLite t = trs::parse_trs(read_file(trs_path));
            const trs::Substitution th1 = trs::parse_substitution(theta1_text, t.signature);
            const trs::Substitution th2 = trs::parse_substitution(theta2_text, t.signature);
            const trs::Term term = trs::parse_term(term_text, t.signature);
            const std::size_t b = budget.value_or(100'000);
            const bool equal = trs::ct_check_terms(t, th1, th2, term, b);
            rep["theta1_t"] = trs::to_string(trs::normalize_term(t, trs::apply_subst(th1, term), b));
            rep["theta2_t"] = trs::to_string(trs::normalize_term(t, trs::apply_subst(th2, term), b));
            rep["common_term"] = equal;
            status = equal ? kTrue : kFalse;
        }
        emit(out, rep, o.json());
        return status;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << '\n';
    }
    return kError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace srsdual::cli
