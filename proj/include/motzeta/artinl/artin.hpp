#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motzeta/artinl/group.hpp"
#include "motzeta/curvezeta/curve.hpp"
#include "motzeta/exactalg/series.hpp"

namespace motzeta::artin {

/// On P^1: x -> (a x + b)/(c x + d).
/// On y^2 = f(x): (x, y) -> (a x + b, d y) with c = 0.
/// Coefficients are residues mod p.
struct Automorphism {
    long long a = 1, b = 0, c = 0, d = 1;
};

/// A group acting on a curve; maps[g] is the automorphism of element g.
struct ActionData {
    curve::CurveData curve = curve::CurveData::projective_line(2);
    std::vector<Automorphism> maps;
};

/// Each map is an automorphism of the curve, and maps respect mult.
Verdict validate_action(const ActionData& a, const CharacterData& g);

/// Smallest m >= 1 with g^m = id.
unsigned automorphism_order(const curve::CurveData& c, const Automorphism& g);

enum class FixMethod {
    automatic,   // kernel on P^1, enumeration otherwise
    enumerate,   // search X(F_{q^{n m}}), m = ord(g)
    kernel,      // P^1 only: separability of the fixed-point polynomial
};

/// #Fix(g F^n) on X over the algebraic closure.
std::uint64_t fixed_points(const ActionData& a, std::size_t g, unsigned n, FixMethod method = FixMethod::automatic);

/// (1/|H|) sum_{h in H} chi(h^-1) #Fix(h F^n), where chi[i] is the value at
/// h[i]. With H = G this is nu_n(chi).
BigRational nu_n(const ActionData& a, const CharacterData& g, const std::vector<std::size_t>& h,
                 const ClassFunction& chi, unsigned n);
BigRational nu_n(const ActionData& a, const CharacterData& g, const ClassFunction& chi, unsigned n);

struct LSeries {
    std::string character;
    alg::Series<BigRational> series;
    std::size_t order = 0;
};

/// exp(sum nu_n t^n / n) to order N, over the subgroup h when given.
LSeries artin_L(const ActionData& a, const CharacterData& g, const ClassFunction& chi, std::size_t order,
                std::string label = {});
LSeries artin_L(const ActionData& a, const CharacterData& g, const std::vector<std::size_t>& h,
                const ClassFunction& chi, std::size_t order, std::string label = {});

/// exp(sum #X(F_{q^n}) t^n / n).
alg::Series<BigRational> curve_zeta_series(const curve::CurveData& c, std::size_t order);

enum class Formalism { additivity, induction, inflation, factorization };

struct InductionData {
    std::vector<std::size_t> subgroup;
    ClassFunction chi;  // values on subgroup, in its order
};

/// X/G' with its G/G' action; projection[g] is the image of g in G/G'.
struct InflationData {
    std::vector<std::size_t> normal_subgroup;
    CharacterData quotient_group;
    ActionData quotient_action;
    std::vector<std::size_t> projection;
    ClassFunction chi;  // on the quotient group
};

struct FormalismInput {
    // additivity uses chi1 and chi2 (irreducibles of g if empty)
    std::optional<ClassFunction> chi1, chi2;
    std::optional<InductionData> induction;
    std::optional<InflationData> inflation;
};

Verdict formalism_check(const ActionData& a, const CharacterData& g, Formalism which, std::size_t order,
                        const FormalismInput& input = {});

Formalism parse_formalism(const std::string& name);
std::string to_string(Formalism f);

struct NamedAction {
    std::string name;
    CharacterData group;
    ActionData action;
    std::optional<InductionData> induction;
    std::optional<InflationData> inflation;
};

/// Z/2, S3 and Z/2xZ/2 on lines over F_3 and F_5, plus the hyperelliptic
/// involution of y^2 = x^3 - x over F_3.
std::vector<NamedAction> builtin_actions();
const NamedAction* builtin_action(const std::string& name);

} // namespace motzeta::artin
