#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gcover {

/// An element of a gain group. For abelian groups the values are residues
/// (g_1, ..., g_m) with 0 <= g_i < r_i; for permutation groups they are the
/// one-line images (p(0), ..., p(r-1)).
struct GroupElement {
    std::vector<int> values;

    auto operator<=>(const GroupElement&) const = default;
};

/// Gain group descriptor: a product of cyclic groups Z_{r_1} x ... x Z_{r_m},
/// or the symmetric group acting on {0..r-1}.
class GroupSpec {
public:
    enum class Kind { abelian, permutation };

    static GroupSpec cyclic(int r);
    static GroupSpec abelian(std::vector<int> orders);
    static GroupSpec permutation(int degree);

    Kind kind() const noexcept { return kind_; }
    bool is_abelian() const noexcept { return kind_ == Kind::abelian; }
    bool is_cyclic() const noexcept { return is_abelian() && orders_.size() == 1; }

    /// Cyclic factor orders (abelian only).
    const std::vector<int>& orders() const noexcept { return orders_; }
    /// Degree of the permutation action (permutation only).
    int degree() const noexcept { return degree_; }

    /// Number of sheets of a cover: |G| for abelian (regular action), the
    /// action degree for permutation groups.
    int sheets() const noexcept;
    /// Group order (abelian only; throws otherwise).
    std::int64_t order() const;

    GroupElement identity() const;
    bool is_identity(const GroupElement& g) const;
    bool contains(const GroupElement& g) const;

    /// Product a*b (apply b first, then a, for permutations).
    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& g) const;

    /// Image of sheet j under g. For abelian groups sheets are group elements
    /// in lexicographic order and the action is translation.
    int act(const GroupElement& g, int sheet) const;

    /// Abelian only: element with lexicographic index `index` and its inverse map.
    GroupElement element_at(std::int64_t index) const;
    std::int64_t index_of(const GroupElement& g) const;

    /// Textual forms used by the gain file ("group cyclic 2" body / "1,0").
    std::string describe() const;
    std::string format(const GroupElement& g) const;
    GroupElement parse(const std::string& text) const;

    bool operator==(const GroupSpec&) const = default;

private:
    Kind kind_ = Kind::abelian;
    std::vector<int> orders_;
    int degree_ = 0;
};

} // namespace gcover
