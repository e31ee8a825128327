#pragma once

#include "ultrafun/scalar.hpp"

#include <vector>

namespace uf::lp {

enum class Sense { LessEq, Equal, GreaterEq };

struct Constraint {
    Vector coeffs;
    Sense sense = Sense::LessEq;
    Scalar rhs;
};

/// min/max objective . x  subject to the constraints; variables are >= 0 unless marked free.
struct Program {
    std::size_t num_vars = 0;
    std::vector<bool> free_vars;  // empty means "all nonnegative"
    std::vector<Constraint> constraints;
    Vector objective;             // empty means feasibility only
    bool maximize = false;

    explicit Program(std::size_t n = 0) : num_vars(n) {}
    void set_free(std::size_t j);
    void add(Vector coeffs, Sense sense, Scalar rhs);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Scalar value;     // objective value at the optimum
    Vector solution;  // primal point (size num_vars) when Optimal
};

/// Two-phase dense tableau simplex over exact rationals. Bland's rule on both
/// phases, so cycling cannot occur.
Result solve(const Program& program);

/// Convenience: does the program have a feasible point?
bool feasible(const Program& program);

}  // namespace uf::lp
