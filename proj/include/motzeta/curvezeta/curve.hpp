#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "motzeta/check.hpp"

namespace motzeta::curve {

/// One term c * X^i Y^j Z^k of a homogeneous plane equation.
struct PlaneTerm {
    long long coef;
    unsigned i, j, k;
};

/// Smooth projective curve over F_p in one of three models.
class CurveData {
public:
    enum class Model { projective_line, plane, hyperelliptic };

    static CurveData projective_line(std::uint64_t p);
    /// Homogeneous F(X,Y,Z) = 0 of degree 3 or 4.
    static CurveData plane(std::uint64_t p, std::vector<PlaneTerm> terms);
    /// y^2 = f(x), coefficients from the constant term, deg f in 3..6, p odd.
    static CurveData hyperelliptic(std::uint64_t p, std::vector<long long> f);

    Model model() const { return model_; }
    std::string model_name() const;
    std::uint64_t p() const { return p_; }
    unsigned genus() const { return genus_; }
    bool smooth() const { return smooth_; }
    const std::vector<PlaneTerm>& plane_terms() const { return terms_; }
    const std::vector<long long>& f() const { return f_; }
    unsigned plane_degree() const { return degree_; }
    std::string describe() const;

private:
    CurveData() = default;

    Model model_ = Model::projective_line;
    std::uint64_t p_ = 2;
    unsigned genus_ = 0;
    bool smooth_ = true;
    unsigned degree_ = 0;
    std::vector<PlaneTerm> terms_;
    std::vector<long long> f_;
};

/// #X(F_{p^n}) by enumeration. Throws BudgetExceeded when the sweep is larger
/// than the enumeration budget.
std::uint64_t count_curve(const CurveData& c, unsigned extension_degree);

/// Counts for n = 1..m, computed as independent tasks.
std::vector<std::uint64_t> count_tower(const CurveData& c, unsigned m);

/// |p + 1 - N_1| <= 2 g sqrt(p).
Verdict hasse_bound_check(const CurveData& c);

struct NamedCurve {
    std::string name;
    CurveData curve;
};

/// Bundled curves over F_2, F_3 and F_5.
std::vector<NamedCurve> builtin_curves();
const CurveData* builtin_curve(const std::string& name);

} // namespace motzeta::curve
