#ifndef SVIR_PSEUDOPARTITION_HPP
#define SVIR_PSEUDOPARTITION_HPP

#include <compare>
#include <utility>
#include <vector>

namespace svir {

/// Exponent map of the even part of a basis monomial: part k ≥ 0 with
/// multiplicity λ(k) names the factor L_{-k}^{λ(k)}. Part 0 is allowed
/// (powers of L_0): |λ| ignores it, which is why the fdeg filtration
/// charges λ(0) separately.
class Pseudopartition {
  public:
    Pseudopartition() = default;
    /// From an unordered list of parts, e.g. {1, 1, 3} for L_{-3}L_{-1}L_{-1}.
    explicit Pseudopartition(std::vector<int> parts);

    void add_part(int k, int multiplicity = 1);
    /// Removes one copy of the largest part; undefined on empty.
    void remove_largest();

    bool empty() const { return exponents_.empty(); }
    int largest_part() const { return exponents_.back().first; }
    int multiplicity(int k) const;
    /// Σ k·λ(k) — part 0 contributes nothing.
    long size() const;
    /// Σ λ(k) — the number of L-factors.
    int length() const;

    /// (part, multiplicity) pairs, parts strictly increasing.
    const std::vector<std::pair<int, int>>& exponents() const { return exponents_; }

    /// Lexicographic on the exponent vector (λ(0), λ(1), λ(2), ...).
    std::strong_ordering operator<=>(const Pseudopartition& other) const;
    bool operator==(const Pseudopartition&) const = default;

  private:
    std::vector<std::pair<int, int>> exponents_;  // sorted by part
};

/// Strictly increasing parts ≥ 0; part k names one odd factor G_{(1-ε)-k}.
/// Strictness is the PBW constraint: odd generators square to even ones.
class StrictPseudopartition {
  public:
    StrictPseudopartition() = default;
    explicit StrictPseudopartition(std::vector<int> parts);

    /// Inserts a new part; throws std::invalid_argument on duplicates.
    void add_part(int k);
    void remove_largest();

    bool empty() const { return parts_.empty(); }
    int largest_part() const { return parts_.back(); }
    bool contains(int k) const;
    /// Σ parts.
    long size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    std::strong_ordering operator<=>(const StrictPseudopartition&) const = default;

  private:
    std::vector<int> parts_;  // strictly increasing
};

}  // namespace svir

#endif  // SVIR_PSEUDOPARTITION_HPP
