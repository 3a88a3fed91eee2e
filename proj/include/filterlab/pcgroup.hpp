#pragma once

// Finite p-groups given by consistent polycyclic presentations.
//
// Generators are g_1..g_n (stored 0-based). Every relative order is the prime
// p. Power relations g_i^p and commutator relations [g_j, g_i] (j > i) are
// words in generators of index > i and > j respectively, so the pc series
// G_k = <g_k, ..., g_n> is central and elements have a unique normal form
// g_1^{e_1} ... g_n^{e_n} with 0 <= e_i < p.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace filterlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg);
    int line() const { return line_; }

private:
    int line_;
};

/// An element in normal form: exponent vector of length n, entries in [0, p).
class GroupElem {
public:
    GroupElem() = default;
    explicit GroupElem(std::vector<int> exps) : exps_(std::move(exps)) {}

    int size() const { return static_cast<int>(exps_.size()); }
    int operator[](int i) const { return exps_[i]; }
    int& operator[](int i) { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_identity() const;
    /// Index of the first nonzero exponent, or size() for the identity.
    int depth() const;

    auto operator<=>(const GroupElem&) const = default;

private:
    std::vector<int> exps_;
};

std::string to_string(const GroupElem& x);

/// A word: sequence of (0-based generator index, exponent) letters.
using Word = std::vector<std::pair<int, int>>;

class Subgroup;

class PcGroup {
public:
    PcGroup() = default;
    /// Builds the group from relation words. `powers[i]` is g_i^p, and
    /// `comms` lists ((j, i), word) for [g_j, g_i] with j > i; omitted
    /// relations are trivial. Throws Error on non-polycyclic relations.
    PcGroup(int p, int n, const std::vector<Word>& powers, const std::vector<std::pair<std::pair<int, int>, Word>>& comms);

    int prime() const { return p_; }
    int rank() const { return n_; }
    /// |G| = p^n; throws if it does not fit in 64 bits.
    long long order() const;

    GroupElem identity() const;
    GroupElem generator(int k) const;
    GroupElem collect(const Word& w) const;
    GroupElem multiply(const GroupElem& x, const GroupElem& y) const;
    GroupElem inverse(const GroupElem& x) const;
    GroupElem power(const GroupElem& x, long long e) const;
    /// [x, y] = x^-1 y^-1 x y
    GroupElem commutator(const GroupElem& x, const GroupElem& y) const;
    /// x^y = y^-1 x y
    GroupElem conjugate(const GroupElem& x, const GroupElem& y) const;
    int element_order(const GroupElem& x) const;

    /// Normal-form relation values, for serialization and products.
    const GroupElem& power_relation(int i) const { return power_[i]; }
    const GroupElem& commutator_relation(int j, int i) const { return comm_[j][i]; }

    /// Overlap consistency test; returns a description of each failing
    /// overlap (empty means consistent).
    std::vector<std::string> overlap_failures() const;

    /// Every element in lexicographic exponent order; requires small order.
    std::vector<GroupElem> elements() const;
    long long index_of(const GroupElem& x) const;
    GroupElem element_at(long long index) const;

    Subgroup whole() const;
    Subgroup trivial() const;

    void check_parent(const GroupElem& x) const;

private:
    void mul_gen(std::vector<int>& x, int k) const;
    void mul_elem(std::vector<int>& x, const std::vector<int>& y) const;

    int p_ = 2;
    int n_ = 0;
    std::vector<GroupElem> power_;
    std::vector<std::vector<GroupElem>> comm_;
    // conj_[j][i] = g_j^{g_i} = g_j [g_j, g_i] in normal form, j > i
    std::vector<std::vector<GroupElem>> conj_;
};

/// A subgroup held as a canonical generating sequence: elements with
/// strictly increasing depth, leading exponent 1, and zero exponent at every
/// other member's leading depth. Equal subgroups have equal sequences.
class Subgroup {
public:
    Subgroup() = default;

    const std::vector<GroupElem>& gens() const { return gens_; }
    int length() const { return static_cast<int>(gens_.size()); }
    std::vector<int> depths() const;
    bool is_trivial() const { return gens_.empty(); }

    auto operator<=>(const Subgroup&) const = default;

private:
    friend Subgroup subgroup_from_gens(const PcGroup&, const std::vector<GroupElem>&);
    std::vector<GroupElem> gens_;
};

Subgroup subgroup_from_gens(const PcGroup& G, const std::vector<GroupElem>& gens);
long long subgroup_order(const PcGroup& G, const Subgroup& H);
bool membership(const PcGroup& G, const GroupElem& x, const Subgroup& H);
Subgroup join(const PcGroup& G, const Subgroup& H, const Subgroup& K);
bool is_subset(const PcGroup& G, const Subgroup& H, const Subgroup& K);
bool is_normal(const PcGroup& G, const Subgroup& H);
Subgroup normal_closure(const PcGroup& G, const Subgroup& H);
Subgroup intersect(const PcGroup& G, const Subgroup& H, const Subgroup& K);
/// [H, K] = <[h, k]>, closed under conjugation by <H, K>.
Subgroup comm_subgroup(const PcGroup& G, const Subgroup& H, const Subgroup& K);
/// Largest K <= G with [K, H] <= N; N must be normal.
Subgroup centralizer_mod(const PcGroup& G, const Subgroup& H, const Subgroup& N);
/// <x^p : x in gens(H)>
Subgroup power_subgroup(const PcGroup& G, const Subgroup& H);
/// All elements of H (product enumeration over the canonical sequence).
std::vector<GroupElem> subgroup_elements(const PcGroup& G, const Subgroup& H);

/// Parses the `.pcg` text format. `aut:` lines are ignored here. With
/// `check_overlaps` false an inconsistent presentation is accepted as is,
/// which lets the oracle report where it breaks.
PcGroup parse_pcgroup(const std::string& text, bool check_overlaps = true);
PcGroup load_pcgroup(const std::string& path, bool check_overlaps = true);
/// Writes a `.pcg` source that parses back to the same presentation.
std::string format_pcgroup(const PcGroup& G);
/// Parses a single word such as "g2^2 g3" (1-based indices).
Word parse_word(const std::string& text, int n, int line = 0);

/// Direct product G1 x G2 with its block embeddings.
struct DirectProduct {
    PcGroup group;
    std::vector<PcGroup> factors;
    std::vector<int> offsets;  // first pc-generator of each factor

    GroupElem embed(int factor, const GroupElem& x) const;
    Subgroup embed(int factor, const Subgroup& H) const;
};

DirectProduct direct_product(const PcGroup& G1, const PcGroup& G2);
DirectProduct direct_product(const std::vector<PcGroup>& parts);

bool is_prime(int p);

}  // namespace filterlab
