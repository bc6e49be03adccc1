#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galore/setcore.hpp"

namespace galore {

class OperatorTable; // optable.hpp

/// A binary relation r between a source universe X and a target universe Y,
/// stored as |X| rows of |Y|-bit vectors (row x = successors of x).
class Relation {
public:
    /// Empty relation.
    Relation(Universe source, Universe target);
    static Relation full(const Universe& source, const Universe& target);
    /// From labelled pairs; throws UnknownElement.
    static Relation from_pairs(const Universe& source, const Universe& target,
                               std::span<const std::pair<std::string, std::string>> pairs);
    /// From a characteristic predicate over bit positions.
    static Relation build(const Universe& source, const Universe& target,
                          const std::function<bool(std::size_t, std::size_t)>& holds);
    /// Requires target size <= 64; row i gets the bits of rows[i].
    static Relation from_row_values(const Universe& source, const Universe& target,
                                    std::span<const std::uint64_t> rows);

    const Universe& source() const { return source_; }
    const Universe& target() const { return target_; }
    std::size_t row_word_count() const { return row_words_; }
    std::span<const std::uint64_t> row(std::size_t x) const;
    SubsetMask row_mask(std::size_t x) const;
    bool contains(std::size_t x, std::size_t y) const;
    std::size_t pair_count() const;
    /// Label pairs in row-major bit order.
    std::vector<std::pair<std::string, std::string>> pairs() const;

    friend bool operator==(const Relation& a, const Relation& b);

private:
    Universe source_;
    Universe target_;
    std::size_t row_words_;
    std::vector<std::uint64_t> bits_; // source.size() * row_words_

    friend Relation converse(const Relation&);
    friend Relation complement_rel(const Relation&);
};

/// Transposed matrix, source/target swapped. Involutive.
Relation converse(const Relation& r);
/// Bitwise complement of each row within the target width. Involutive.
Relation complement_rel(const Relation& r);

/// The three predicate transformers of a relation r over X x Y, all mapping
/// P(Y) -> P(X):
///   angel: {x | some r-successor of x lies in V}      (row intersects V)
///   demon: {x | every r-successor of x lies in V}     (row contained in V)
///   ortho: {x | x is r-related to every element of V} (row contains V)
/// angel and demon are monotone, ortho is antitone.
enum class TransformKind { angel, demon, ortho };

const char* transform_kind_name(TransformKind kind);

SubsetMask transform(TransformKind kind, const Relation& r, const SubsetMask& v);

/// Outcome of an exhaustive law check. When a law fails, the counterexample
/// carries the inputs and the rendered values of both sides.
struct LawCounterexample {
    std::string law;
    std::optional<SubsetMask> u; // present for laws quantified over pairs
    SubsetMask v;
    std::string lhs;
    std::string rhs;
};

struct GaloisReport {
    bool holds = true;
    std::optional<LawCounterexample> counterexample;
};

/// Exhaustive checks refuse to run when 2^|X| * 2^|Y| exceeds 2^budget_log2.
inline constexpr std::size_t kDefaultCheckBudgetLog2 = 24;

/// Verifies, over every V in P(Y):
///   angel(r, ~V) == ~demon(r, V)
///   angel(~r, V) == ~ortho(r, V)
/// Returns the first violating V in ascending mask order.
GaloisReport check_negation_laws(const Relation& r,
                                 std::size_t budget_log2 = kDefaultCheckBudgetLog2);

/// Test seam: same check with a replaceable angel evaluator.
using AngelEval = std::function<SubsetMask(const Relation&, const SubsetMask&)>;
GaloisReport check_negation_laws_with(const Relation& r, const AngelEval& angel_eval,
                                      std::size_t budget_log2 = kDefaultCheckBudgetLog2);

/// Verifies, over every pair (U in P(X), V in P(Y)):
///   angel(r, V) <= U   iff   V <= demon(conv r, U)
///   U <= ortho(r, V)   iff   V <= ortho(conv r, U)
GaloisReport check_galois(const Relation& r,
                          std::size_t budget_log2 = kDefaultCheckBudgetLog2);

/// Recipes recovering a relation from an operator table F : P(Y) -> P(X).
///   sup:      (x,y) in r  iff  x in F({y})
///   inf:      (x,y) in r  iff  for every U <= Y, x in F(U) implies y in U
///   antitone: complement_rel of the sup extraction of the pointwise
///             complement of F
/// If F genuinely is a union/intersection/union-to-intersection morphism,
/// the corresponding transformer of the result reproduces F pointwise; the
/// extraction itself does not verify that property.
enum class ExtractKind { sup, inf, antitone };

Relation extract_relation(const OperatorTable& f, ExtractKind kind);

} // namespace galore
