#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galore/errors.hpp"

namespace galore {

// Universes above this size need an explicit cap override; the absolute
// ceiling keeps 2^n operator tables addressable (8 MiB of entries at 20,
// 128 MiB at 24).
inline constexpr std::size_t kDefaultUniverseCap = 20;
inline constexpr std::size_t kMaxUniverseCap = 24;

/// A named finite set with a stable label -> bit-position assignment
/// (declaration order). Cheap to copy; the payload is shared and immutable.
class Universe {
public:
    std::size_t size() const { return data_->labels.size(); }
    const std::string& name() const { return data_->name; }
    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Same universe = same name and same label sequence. Pointer identity
    /// is the fast path for values minted by the same declaration.
    bool same_as(const Universe& other) const;

private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
    };
    explicit Universe(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;

    friend Universe make_universe(std::string, std::vector<std::string>, std::size_t);
    friend Universe internal_universe(std::string, std::vector<std::string>);
};

/// Checked constructor: labels nonempty, distinct, count within cap.
/// Throws DuplicateLabel or UniverseTooLarge.
Universe make_universe(std::string name, std::vector<std::string> labels,
                       std::size_t cap = kDefaultUniverseCap);

/// Unchecked-size constructor for machine-built universes (interpolants,
/// powerset grounds). Labels must still be distinct; empty is allowed.
Universe internal_universe(std::string name, std::vector<std::string> labels);

/// A subset of a universe, packed into 64-bit words. Bits at positions
/// >= size are always zero. Set algebra requires both operands to live in
/// the same universe (UniverseMismatch otherwise).
class SubsetMask {
public:
    static SubsetMask empty(const Universe& u);
    static SubsetMask full(const Universe& u);
    /// Requires u.size() <= 64.
    static SubsetMask from_value(const Universe& u, std::uint64_t value);
    static SubsetMask from_words(const Universe& u, std::vector<std::uint64_t> words);

    const Universe& universe() const { return universe_; }
    std::span<const std::uint64_t> words() const { return words_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    std::size_t count() const;
    bool none() const;
    /// Numeric value of the bits; requires universe size <= 64.
    std::uint64_t value() const;

    SubsetMask union_with(const SubsetMask& other) const;
    SubsetMask intersect(const SubsetMask& other) const;
    SubsetMask minus(const SubsetMask& other) const;
    SubsetMask complement() const;
    bool subset_of(const SubsetMask& other) const;
    bool intersects(const SubsetMask& other) const;

    /// Labels of the set bits, in declaration (bit) order.
    std::vector<std::string> label_list() const;
    /// Rendering like "{a,b}".
    std::string to_text() const;

    friend bool operator==(const SubsetMask& a, const SubsetMask& b);
    /// Order by numeric value of the bit string (most significant word first).
    static bool numeric_less(const SubsetMask& a, const SubsetMask& b);

private:
    SubsetMask(Universe u, std::vector<std::uint64_t> words)
        : universe_(std::move(u)), words_(std::move(words)) {}
    void require_same_universe(const SubsetMask& other) const;

    Universe universe_;
    std::vector<std::uint64_t> words_;
};

/// mask_of(u, names): the subset containing exactly `names`.
/// Throws UnknownElement naming the first offender.
SubsetMask mask_of(const Universe& u, std::span<const std::string> names);
SubsetMask mask_of(const Universe& u, std::initializer_list<const char*> names);

/// A duplicate-free family of subsets of one universe, kept sorted by
/// numeric mask value so equality is structural.
class SubsetFamily {
public:
    SubsetFamily(Universe u, std::vector<SubsetMask> members);
    static SubsetFamily empty(const Universe& u) { return SubsetFamily(u, {}); }

    const Universe& universe() const { return universe_; }
    std::span<const SubsetMask> members() const { return members_; }
    const SubsetMask& member(std::size_t i) const { return members_[i]; }
    std::size_t size() const { return members_.size(); }
    bool contains(const SubsetMask& m) const;

    friend bool operator==(const SubsetFamily& a, const SubsetFamily& b);

private:
    Universe universe_;
    std::vector<SubsetMask> members_;
};

enum class SaturateMode { unions, intersections };

/// Smallest superfamily closed under binary unions (resp. intersections).
/// unions always adds the empty set (empty union); intersections always
/// adds the full mask (empty intersection).
SubsetFamily family_saturate(const SubsetFamily& f, SaturateMode mode);

} // namespace galore
