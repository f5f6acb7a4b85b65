#include "srsdual/gpcp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "srsdual/error.hpp"
#include "srsdual/rewrite.hpp"

namespace srsdual {

const Domino& GpcpInstance::domino(std::size_t i) const {
    if (i == 0) return start;
    if (i <= tiles.size()) return tiles[i - 1];
    if (i == tiles.size() + 1) return end;
    throw std::out_of_range("domino index out of range");
}

void GpcpInstance::validate() const {
    for (std::size_t i = 0; i <= tiles.size() + 1; ++i) {
        const Domino& d = domino(i);
        if (d.top.empty() || d.bottom.empty())
            throw PreconditionError("domino " + std::to_string(i) + " has an empty component");
        for (const auto* side : {&d.top, &d.bottom})
            for (Symbol s : *side)
                if (index_of(s) >= alphabet.size())
                    throw PreconditionError("domino " + std::to_string(i) + " uses a symbol outside the alphabet");
    }
}

GpcpInstance parse_gpcp(std::string_view text) {
    GpcpInstance inst;
    bool have_start = false;
    bool have_end = false;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto colon = line.find(':');
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected '<kind>: <top> | <bottom>'");
        std::string kind;
        std::istringstream(std::string(line.substr(0, colon))) >> kind;
        const std::string_view body = line.substr(colon + 1);
        const auto bar = body.find('|');
        if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected exactly one '|'");
        auto side = [&](std::string_view part, const char* which) {
            SymbolString w;
            std::istringstream toks{std::string(part)};
            for (std::string tok; toks >> tok;) w.push_back(inst.alphabet.intern(tok));
            if (w.empty()) throw ParseError(line_no, std::string("empty ") + which + " component");
            return w;
        };
        Domino d;
        d.top = side(body.substr(0, bar), "top");
        d.bottom = side(body.substr(bar + 1), "bottom");
        if (kind == "start") {
            if (have_start) throw ParseError(line_no, "duplicate start domino");
            if (!inst.tiles.empty() || have_end) throw ParseError(line_no, "start domino must come first");
            inst.start = std::move(d);
            have_start = true;
        } else if (kind == "tile") {
            if (have_end) throw ParseError(line_no, "tile after end domino");
            inst.tiles.push_back(std::move(d));
        } else if (kind == "end") {
            if (have_end) throw ParseError(line_no, "duplicate end domino");
            inst.end = std::move(d);
            have_end = true;
        } else {
            throw ParseError(line_no, "unknown line kind '" + kind + "'");
        }
    }
    if (!have_start) throw ParseError(0, "missing start domino");
    if (!have_end) throw ParseError(0, "missing end domino");
    return inst;
}

std::string format_gpcp(const GpcpInstance& inst) {
    auto line = [&](const char* kind, const Domino& d) {
        return std::string(kind) + ": " + to_string(inst.alphabet, d.top) + " | " +
               to_string(inst.alphabet, d.bottom) + "\n";
    };
    std::string out = line("start", inst.start);
    for (const Domino& d : inst.tiles) out += line("tile", d);
    out += line("end", inst.end);
    return out;
}

std::pair<SymbolString, SymbolString> concatenations(const GpcpInstance& inst,
                                                     const std::vector<std::size_t>& indices) {
    SymbolString x = inst.start.top;
    SymbolString y = inst.start.bottom;
    for (std::size_t i : indices) {
        if (i == 0 || i > inst.tiles.size()) throw PreconditionError("tile index out of range");
        const Domino& d = inst.tiles[i - 1];
        x.insert(x.end(), d.top.begin(), d.top.end());
        y.insert(y.end(), d.bottom.begin(), d.bottom.end());
    }
    x.insert(x.end(), inst.end.top.begin(), inst.end.top.end());
    y.insert(y.end(), inst.end.bottom.begin(), inst.end.bottom.end());
    return {std::move(x), std::move(y)};
}

bool verifies(const GpcpInstance& inst, const GpcpSolution& sol) {
    for (std::size_t i : sol.indices)
        if (i == 0 || i > inst.tiles.size()) return false;
    auto [x, y] = concatenations(inst, sol.indices);
    return x == y && x == sol.match;
}

std::optional<GpcpSolution> gpcp_brute_force(const GpcpInstance& inst, std::size_t k_max) {
    struct Partial {
        std::vector<std::size_t> indices;
        SymbolString x, y;
    };
    auto compatible = [](const SymbolString& a, const SymbolString& b) {
        const auto k = std::min(a.size(), b.size());
        return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), b.begin());
    };
    std::deque<Partial> queue;
    if (compatible(inst.start.top, inst.start.bottom)) queue.push_back({{}, inst.start.top, inst.start.bottom});
    while (!queue.empty()) {
        Partial cur = std::move(queue.front());
        queue.pop_front();
        SymbolString x = concat(cur.x, inst.end.top);
        SymbolString y = concat(cur.y, inst.end.bottom);
        if (x == y) return GpcpSolution{cur.indices, std::move(x)};
        if (cur.indices.size() == k_max) continue;
        for (std::size_t i = 1; i <= inst.tiles.size(); ++i) {
            Partial next{cur.indices, concat(cur.x, inst.tiles[i - 1].top), concat(cur.y, inst.tiles[i - 1].bottom)};
            if (!compatible(next.x, next.y)) continue;
            next.indices.push_back(i);
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Binarization

SymbolString Binarization::apply(const SymbolString& w) const {
    SymbolString out;
    for (Symbol s : w) {
        const auto& c = code.at(index_of(s));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

SymbolString Binarization::invert(const SymbolString& w) const {
    SymbolString out;
    std::size_t pos = 0;
    while (pos < w.size()) {
        // Codes are a b^k (or single letters for the identity map): take the longest match.
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < code.size(); ++k) {
            const auto& c = code[k];
            if (pos + c.size() > w.size()) continue;
            if (!std::equal(c.begin(), c.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
            if (!identity) {
                const std::size_t after = pos + c.size();
                // The next code word (if any) must start with `a`, so the run must end here.
                if (after < w.size() && target.name(w[after]) != "a") continue;
            }
            if (!best || c.size() > code[*best].size()) best = k;
        }
        if (!best) throw PreconditionError("word is not an image of the binarization code");
        out.push_back(static_cast<Symbol>(*best));
        pos += code[*best].size();
    }
    return out;
}

bool is_binary(const GpcpInstance& inst) {
    return std::all_of(inst.alphabet.names().begin(), inst.alphabet.names().end(),
                       [](const std::string& n) { return n == "a" || n == "b"; });
}

BinarizedInstance binarize(const GpcpInstance& inst) {
    BinarizedInstance out;
    out.table.source = inst.alphabet;
    out.table.identity = is_binary(inst);
    if (out.table.identity) {
        out.instance = inst;
        out.table.target = inst.alphabet;
        for (std::size_t k = 0; k < inst.alphabet.size(); ++k) out.table.code.push_back({static_cast<Symbol>(k)});
        return out;
    }
    out.table.target = Alphabet({"a", "b"});
    const Symbol a = *out.table.target.find("a");
    const Symbol b = *out.table.target.find("b");
    for (std::size_t k = 0; k < inst.alphabet.size(); ++k) {
        SymbolString c{a};
        c.insert(c.end(), k, b);
        out.table.code.push_back(std::move(c));
    }
    auto map = [&](const Domino& d) { return Domino{out.table.apply(d.top), out.table.apply(d.bottom)}; };
    out.instance.alphabet = out.table.target;
    out.instance.start = map(inst.start);
    for (const Domino& d : inst.tiles) out.instance.tiles.push_back(map(d));
    out.instance.end = map(inst.end);
    return out;
}

// ---------------------------------------------------------------------------
// Encoding

SymbolString CtEncoding::image(int k, const SymbolString& w) const {
    if (k < 1 || k > 3) throw PreconditionError("homomorphism index must be 1, 2 or 3");
    SymbolString out;
    for (Symbol s : w) {
        const std::string& name = instance.alphabet.name(s);
        const auto& img = homomorphisms[static_cast<std::size_t>(k - 1)][name == "a" ? 0 : 1];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

CtEncoding encode(const GpcpInstance& inst) {
    inst.validate();
    if (!is_binary(inst)) throw PreconditionError("encode: instance alphabet must be within {a, b}; binarize first");
    const std::size_t n = inst.tiles.size();

    std::vector<std::string> names = {"a", "b"};
    for (std::size_t i = 0; i <= n + 1; ++i) names.push_back("c" + std::to_string(i));
    for (const char* s : {"cent1", "cent2", "B", "a1", "a2", "a3", "b1", "b2", "b3"}) names.emplace_back(s);
    Alphabet hat(names);
    auto sym = [&](const char* name) { return *hat.find(name); };

    CtEncoding enc{Srs(hat, {}), inst, std::nullopt, {sym("cent1")}, {sym("cent2")}, {}, sym("cent1"),
                   sym("cent2"), sym("B"), {}};
    for (std::size_t i = 0; i <= n + 1; ++i) enc.controls.push_back(*hat.find("c" + std::to_string(i)));
    enc.homomorphisms[0] = {SymbolString{sym("a1"), sym("a2"), sym("a3")}, SymbolString{sym("b1"), sym("b2"), sym("b3")}};
    enc.homomorphisms[1] = {SymbolString{sym("a1"), sym("a2")}, SymbolString{sym("b1"), sym("b2")}};
    enc.homomorphisms[2] = {SymbolString{sym("a1")}, SymbolString{sym("b1")}};
    const auto& h = enc.homomorphisms;

    std::vector<Rule> rules;
    auto add = [&](SymbolString lhs, SymbolString rhs, const char* tag) {
        rules.push_back(Rule{std::move(lhs), std::move(rhs), 0, tag});
    };
    auto cat = [](std::initializer_list<SymbolString> parts) {
        SymbolString w;
        for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
        return w;
    };
    const SymbolString c1{enc.cent1}, c2{enc.cent2}, marker{enc.marker_b};

    // Class D: the cent markers rewrite h1 blocks to h3 (cent1) or h2 (cent2) ...
    for (const SymbolString& cent : {c1, c2})
        for (std::size_t x = 0; x < 2; ++x)
            add(cat({cent, h[0][x]}), cat({cent, cent == c1 ? h[2][x] : h[1][x]}), "D");
    // ... and an h2/h3 block propagates its speed to the h1 block after it.
    for (std::size_t k : {1u, 2u})
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) add(cat({h[k][x], h[0][y]}), cat({h[k][x], h[k][y]}), "D");

    auto ctl = [&](std::size_t i) { return SymbolString{enc.controls[i]}; };
    add(cat({c1, enc.image(3, inst.start.top), marker, ctl(0)}), {}, "I");
    add(cat({c2, enc.image(2, inst.start.bottom), ctl(0)}), {}, "I");
    for (std::size_t i = 1; i <= n; ++i) {
        add(cat({enc.image(3, inst.tiles[i - 1].top), marker, ctl(i)}), {}, "II");
        add(cat({enc.image(2, inst.tiles[i - 1].bottom), ctl(i), marker}), {}, "II");
    }
    add(cat({enc.image(3, inst.end.top), ctl(n + 1)}), {}, "III");
    add(cat({enc.image(2, inst.end.bottom), ctl(n + 1), marker}), {}, "III");

    enc.srs = Srs(std::move(hat), std::move(rules));
    return enc;
}

CtEncoding encode_any(const GpcpInstance& inst) {
    if (is_binary(inst)) return encode(inst);
    BinarizedInstance bin = binarize(inst);
    CtEncoding enc = encode(bin.instance);
    enc.binarization = std::move(bin.table);
    return enc;
}

std::string format_encoding(const CtEncoding& enc) {
    std::string out = "# alpha: " + enc.srs.show(enc.alpha) + "\n# beta: " + enc.srs.show(enc.beta) + "\n";
    if (enc.binarization) {
        const Binarization& b = *enc.binarization;
        out += "# binarization:";
        for (std::size_t k = 0; k < b.source.size(); ++k)
            out += " " + b.source.names()[k] + "=" + to_string(b.target, b.code[k]);
        out += "\n";
    }
    return out + format_srs(enc.srs);
}

// ---------------------------------------------------------------------------
// Witness translation

namespace {

struct SideForms {
    SymbolString first, second;
};

SideForms side_forms(const CtEncoding& enc, const SymbolString& w) {
    return {normal_form(enc.srs, concat(enc.alpha, w)), normal_form(enc.srs, concat(enc.beta, w))};
}

}  // namespace

bool verify_witness(const CtEncoding& enc, const SymbolString& w) {
    const SideForms f = side_forms(enc, w);
    return f.first == f.second;
}

CtWitness witness_from_solution(const CtEncoding& enc, const GpcpSolution& sol) {
    if (!verifies(enc.instance, sol)) throw PreconditionError("witness_from_solution: solution does not verify");
    const std::size_t n = enc.tile_count();
    CtWitness out;
    out.match_part = sol.match;
    out.tail = {enc.controls[n + 1], enc.marker_b};
    // The end domino is consumed first, so tiles appear in reverse match order.
    for (auto it = sol.indices.rbegin(); it != sol.indices.rend(); ++it) {
        out.tail.push_back(enc.controls[*it]);
        out.tail.push_back(enc.marker_b);
    }
    out.tail.push_back(enc.controls[0]);
    out.word = concat(enc.image(1, sol.match), out.tail);
    const SideForms f = side_forms(enc, out.word);
    if (!f.first.empty() || !f.second.empty())
        throw std::logic_error("witness_from_solution: constructed witness does not erase both markers");
    return out;
}

GpcpSolution solution_from_witness(const CtEncoding& enc, const SymbolString& w) {
    if (!verify_witness(enc, w)) throw PreconditionError("solution_from_witness: witness does not verify");
    const std::size_t n = enc.tile_count();
    const auto& h1 = enc.homomorphisms[0];
    // Longest prefix that is an h1 image.
    SymbolString z1;
    std::size_t pos = 0;
    auto block_at = [&](const SymbolString& block) {
        return pos + block.size() <= w.size() &&
               std::equal(block.begin(), block.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    };
    const auto a_sym = enc.instance.alphabet.find("a");
    const auto b_sym = enc.instance.alphabet.find("b");
    while (true) {
        if (a_sym && block_at(h1[0])) {
            z1.push_back(*a_sym);
            pos += h1[0].size();
        } else if (b_sym && block_at(h1[1])) {
            z1.push_back(*b_sym);
            pos += h1[1].size();
        } else {
            break;
        }
    }

    // Tail: c_{n+1} B (c_j B)* c0.
    const SymbolString tail(w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    auto bad_tail = [] { return PreconditionError("solution_from_witness: tail is not of the form c_{n+1} B (c_i B)* c0"); };
    if (tail.size() < 3 || tail[0] != enc.controls[n + 1] || tail[1] != enc.marker_b || tail.back() != enc.controls[0])
        throw bad_tail();
    std::vector<std::size_t> listed;
    std::size_t t = 2;
    for (; t + 1 < tail.size(); t += 2) {
        if (tail[t + 1] != enc.marker_b) throw bad_tail();
        const auto it = std::find(enc.controls.begin() + 1, enc.controls.begin() + static_cast<std::ptrdiff_t>(n + 1), tail[t]);
        if (it == enc.controls.begin() + static_cast<std::ptrdiff_t>(n + 1)) throw bad_tail();
        listed.push_back(static_cast<std::size_t>(it - enc.controls.begin()));
    }
    if (t != tail.size() - 1) throw bad_tail();

    GpcpSolution sol{{listed.rbegin(), listed.rend()}, std::move(z1)};
    if (!verifies(enc.instance, sol))
        throw PreconditionError("solution_from_witness: decoded dominoes do not match");
    return sol;
}

bool is_tail_form(const CtEncoding& enc, const SymbolString& gamma) {
    const std::size_t n = enc.tile_count();
    auto is_tile_control = [&](Symbol s) {
        return std::find(enc.controls.begin() + 1, enc.controls.begin() + static_cast<std::ptrdiff_t>(n + 1), s) !=
               enc.controls.begin() + static_cast<std::ptrdiff_t>(n + 1);
    };
    std::size_t i = 0;
    while (i + 1 < gamma.size() && is_tile_control(gamma[i]) && gamma[i + 1] == enc.marker_b) i += 2;
    return i + 1 == gamma.size() && gamma[i] == enc.controls[0];
}

}  // namespace srsdual
