#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "motzeta/check.hpp"
#include "motzeta/exactalg/rational.hpp"

namespace motzeta::artin {

using alg::BigRational;

/// Values indexed by group element (not by class).
using ClassFunction = std::vector<BigRational>;

/// A finite group by its multiplication table with a rational character
/// table. mult[g][h] is the index of gh, where gh acts as "h first, then g".
struct CharacterData {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> mult;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> class_of;
    std::vector<std::string> character_names;
    std::vector<std::vector<BigRational>> table;  // [character][class]

    std::size_t order() const { return labels.size(); }
    std::size_t class_count() const;
    std::size_t identity() const;
    std::size_t element(const std::string& label) const;
    std::size_t character_index(const std::string& name) const;
    /// Irreducible character k as a function on elements.
    ClassFunction character(std::size_t k) const;
    ClassFunction regular() const;
    /// Group axioms, conjugacy classes, row orthogonality, degrees.
    Verdict validate() const;
};

/// <a, b> = (1/|G|) sum a(g) b(g^-1).
BigRational inner_product(const CharacterData& g, const ClassFunction& a, const ClassFunction& b);

bool is_subgroup(const CharacterData& g, const std::vector<std::size_t>& h);
bool is_normal_subgroup(const CharacterData& g, const std::vector<std::size_t>& h);

/// Ind_H^G of chi_h, where chi_h[i] is the value at h[i].
ClassFunction induce(const CharacterData& g, const std::vector<std::size_t>& h, const ClassFunction& chi_h);

/// Group from a faithful permutation representation, composition "b first,
/// then a". Conjugacy classes are numbered by their first element and
/// `table[k]` lists character k on those classes. Throws PreconditionError
/// when the permutations do not form a group.
CharacterData from_permutations(std::string name, std::vector<std::string> labels,
                                const std::vector<std::vector<std::size_t>>& perms,
                                std::vector<std::string> character_names, std::vector<std::vector<BigRational>> table);

CharacterData cyclic2();
/// Permutations of {0, 1, 2}; labels in cycle notation.
CharacterData symmetric3();
CharacterData klein4();
CharacterData trivial_group();

} // namespace motzeta::artin
