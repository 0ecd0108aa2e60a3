#pragma once

#include <optional>
#include <vector>

#include "sflow/rational.hpp"

namespace sflow {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Variable bounds; an absent side means unbounded in that direction.
/// Infinite capacities are therefore absent bounds, never large numbers.
struct VariableBounds {
    std::optional<Rational> lower = Rational(0);
    std::optional<Rational> upper = std::nullopt;

    static VariableBounds non_negative() { return {Rational(0), std::nullopt}; }
    static VariableBounds free_variable() { return {std::nullopt, std::nullopt}; }
    static VariableBounds box(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
    static VariableBounds fixed(Rational v) { return {v, v}; }
};

struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::Equal;
    Rational rhs = Rational(0);
};

struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<VariableBounds> bounds;  // one per variable
};

/// When optimal, `primal` is a basic feasible solution (a vertex): the basic
/// columns reported in `basis` (structural and slack indices) are linearly
/// independent.  When unbounded, `ray` is an improving feasible direction.
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    std::vector<Rational> primal;
    Rational objective = Rational(0);
    std::vector<int> basis;
    std::vector<Rational> ray;
};

/// Two-phase dense simplex over exact rationals.  Entering and leaving
/// variables follow Bland's smallest-index rule, so the solver terminates on
/// every input and is deterministic.
LpSolution solve(const LinearProgram& lp);

/// Phase one only: some exact vertex of the region, or nothing iff empty.
std::optional<std::vector<Rational>> feasible_point(
    const std::vector<LinearConstraint>& constraints,
    const std::vector<VariableBounds>& bounds);

}  // namespace sflow
