#pragma once

#include "cohiggs/sections.hpp"

#include <string>
#include <vector>

namespace cohiggs {

enum class Bundle { O1, O2, T, Tm1, Sym2T, Sym2Tm1 };

std::string bundle_name(Bundle b);

/// Scalar transition of O(k): rep_i = t * rep_j, entries in chart-i
/// coordinates (t = (x_{u(j)} / x_{u(i)})^k).
RatFunc line_transition(int k, Chart i, Chart j);

/// Tangent transition g with rep_i = g * (rep_j o chart_map(i, j)), entries
/// in chart-i coordinates. Derived from the chart-change jacobian; this is
/// the artifact's ground truth.
RatFuncMatrix tangent_transition(Chart i, Chart j);

/// T(-1) = T (x) O(-1).
RatFuncMatrix tm1_transition(Chart i, Chart j);

/// The displayed 3x3 symmetric-square matrix in the ordered basis
/// {e1^2, e1 e2, e2^2}: multiplicative, det(Sym2 g) = det(g)^3.
RatFuncMatrix sym2_matrix(const RatFuncMatrix& g);
ScalarMatrix sym2_matrix(const ScalarMatrix& g);

/// Action of g on component triples (s1^2, s1 s2, s2^2). Conjugate of
/// sym2_matrix by diag(1, 2, 1); this is what glues Sym2Triple data.
RatFuncMatrix sym2_vector_action(const RatFuncMatrix& g);

/// Transition for Sym2Triple data of the given base bundle (T or Tm1).
RatFuncMatrix sym2_triple_transition(Bundle base, Chart i, Chart j);

/// Full transition matrix of a bundle as a linear map of component vectors
/// (1x1 for line bundles).
RatFuncMatrix bundle_transition(Bundle b, Chart i, Chart j);

// ---- paper golden data -------------------------------------------------

/// One of the displayed trivialization matrices g'_12, g'_23, g'_31.
struct GoldenTransition {
    std::string name;   // "g12", "g23", "g31"
    Chart a, b;         // the chart pair (paper indices 1,2,3 -> 0,1,2)
    RatFuncMatrix matrix;
};

std::vector<GoldenTransition> paper_tangent_transitions();

/// Per-entry comparison of a displayed matrix against the jacobian-derived
/// transitions, at exact sample points of the overlap. Both coordinate
/// readings of the displayed formula are tried:
///   forward: variables are chart-a coordinates, claims d(chart change a->b)
///   reverse: variables are chart-b coordinates, claims d(chart change b->a)
struct GoldenComparison {
    std::string name;
    bool forward_match = false;
    bool reverse_match = false;
    std::array<std::array<bool, 2>, 2> forward_entry{};  // per-entry agreement
    std::array<std::array<bool, 2>, 2> reverse_entry{};
    int points = 0;
};

std::vector<GoldenComparison> compare_paper_transitions(std::uint64_t seed, int points = 20);

// ---- cocycle and gluing checks ------------------------------------------

struct CocycleReport {
    Bundle bundle;
    int points = 0;
    int failures = 0;
    bool inverse_ok = true;   // g_ij * g_ji == identity at the sample points
    bool passed() const { return failures == 0 && inverse_ok; }
};

/// Evaluates g_ij g_jk g_ki at exact points with all homogeneous
/// coordinates nonzero; points on coordinate hyperplanes are resampled.
CocycleReport cocycle_check(Bundle b, std::uint64_t seed, int points = 20);

/// Symbolic gluing of global-section models: the chart-i representative
/// equals the transition applied to the chart-j representative for every
/// ordered chart pair.
bool glue_check(const SectionOk& s);
bool glue_check(const SectionTm1& s);
bool glue_check(const SectionT& s);

/// Gluing for a chart-0 component triple of Sym^2(T) (x) O(twist): the
/// transported representatives on charts 1, 2 must be polynomial. When the
/// triple comes from a global section this is exactly the gluing condition.
/// `direct` optionally supplies independently computed chart reps that the
/// transport must then match.
bool glue_check_triple(const Sym2Triple& t0, Bundle base,
                       const std::array<const Sym2Triple*, 3>* direct = nullptr);

}  // namespace cohiggs
