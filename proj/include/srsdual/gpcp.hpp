#pragma once

#include <cstddef>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srsdual/srs.hpp"

namespace srsdual {

struct Domino {
    SymbolString top;     // x_i
    SymbolString bottom;  // y_i
    bool operator==(const Domino&) const = default;
};

/// Generalized PCP instance with designated start and end dominoes.
/// Intermediate tiles are numbered 1..n; the end domino is n+1.
struct GpcpInstance {
    Alphabet alphabet;
    Domino start;
    std::vector<Domino> tiles;
    Domino end;

    std::size_t tile_count() const noexcept { return tiles.size(); }
    /// Domino by GPCP index: 0 = start, 1..n = tiles, n+1 = end.
    const Domino& domino(std::size_t i) const;
    /// Throws PreconditionError when a component is empty or a symbol is out of range.
    void validate() const;
};

struct GpcpSolution {
    std::vector<std::size_t> indices;  // intermediate tiles, 1-based, in match order
    SymbolString match;
    bool operator==(const GpcpSolution&) const = default;
};

GpcpInstance parse_gpcp(std::string_view text);
std::string format_gpcp(const GpcpInstance& inst);

/// x- and y-concatenations for an index sequence (start and end included).
std::pair<SymbolString, SymbolString> concatenations(const GpcpInstance& inst,
                                                     const std::vector<std::size_t>& indices);
bool verifies(const GpcpInstance& inst, const GpcpSolution& sol);

/// Breadth-first over index sequences of length 0..k_max in lexicographic
/// order, pruning prefix-incompatible partial concatenations.
std::optional<GpcpSolution> gpcp_brute_force(const GpcpInstance& inst, std::size_t k_max);

/// Homomorphic recoding of the source alphabet into {a, b}.
struct Binarization {
    Alphabet source;
    Alphabet target;                    // {a, b}
    std::vector<SymbolString> code;     // per source symbol id
    bool identity = true;

    SymbolString apply(const SymbolString& w) const;
    /// Inverse of apply; throws PreconditionError when `w` is not a code image.
    SymbolString invert(const SymbolString& w) const;
};

struct BinarizedInstance {
    GpcpInstance instance;
    Binarization table;
};

/// k-th source symbol -> a b^k. Identity when the alphabet is already within {a, b}.
BinarizedInstance binarize(const GpcpInstance& inst);

/// True iff every symbol name is `a` or `b`.
bool is_binary(const GpcpInstance& inst);

/// The dwindling convergent system of the reduction, with alpha = cent1, beta = cent2.
struct CtEncoding {
    Srs srs;
    GpcpInstance instance;  // over {a, b}
    std::optional<Binarization> binarization;
    SymbolString alpha;
    SymbolString beta;
    /// h1, h2, h3 images of `a` and `b` (index 0 = a, 1 = b).
    std::array<std::array<SymbolString, 2>, 3> homomorphisms;

    Symbol cent1, cent2, marker_b;
    std::vector<Symbol> controls;  // c0 .. c_{n+1}

    std::size_t tile_count() const noexcept { return instance.tiles.size(); }
    /// h_k(w) for k in {1, 2, 3}, w over the instance alphabet {a, b}.
    SymbolString image(int k, const SymbolString& w) const;
};

/// Requires a binary instance.
CtEncoding encode(const GpcpInstance& inst);
/// Binarizes first when needed and records the table.
CtEncoding encode_any(const GpcpInstance& inst);

/// Encoder output: two header comments recording alpha and beta, then the SRS.
std::string format_encoding(const CtEncoding& enc);

struct CtWitness {
    SymbolString word;
    SymbolString match_part;  // Z1 over {a, b}
    SymbolString tail;        // Z2
};

/// W = h1(w) c_{n+1} B c_{i_k} B ... c_{i_1} B c0 (tail in reverse match order).
/// Throws PreconditionError when `sol` does not verify.
CtWitness witness_from_solution(const CtEncoding& enc, const GpcpSolution& sol);

/// Inverse translation. Throws PreconditionError when W does not verify, its
/// prefix is not an h1 image, or its tail is not of the required shape.
GpcpSolution solution_from_witness(const CtEncoding& enc, const SymbolString& w);

/// NF(cent1 W) == NF(cent2 W).
bool verify_witness(const CtEncoding& enc, const SymbolString& w);

/// gamma in (c_i B)* c0 with i in 1..n.
bool is_tail_form(const CtEncoding& enc, const SymbolString& gamma);

}  // namespace srsdual
