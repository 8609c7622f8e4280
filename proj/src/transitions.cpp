#include "cohiggs/transitions.hpp"

#include "cohiggs/errors.hpp"
#include "cohiggs/rng.hpp"

namespace cohiggs {

std::string bundle_name(Bundle b) {
    switch (b) {
        case Bundle::O1: return "O(1)";
        case Bundle::O2: return "O(2)";
        case Bundle::T: return "T";
        case Bundle::Tm1: return "T(-1)";
        case Bundle::Sym2T: return "Sym2(T)";
        case Bundle::Sym2Tm1: return "Sym2(T)(-2)";
    }
    return "?";
}

RatFunc line_transition(int k, Chart i, Chart j) {
    auto x = homogeneous_on_chart(i);
    RatFunc base{x[unit_coord(j)]};
    RatFunc t = RatFunc::constant(Scalar(1L));
    for (int n = 0; n < std::abs(k); ++n) t *= base;
    return k >= 0 ? t : t.inverse();
}

RatFuncMatrix tangent_transition(Chart i, Chart j) {
    // jacobian of the chart change j -> i, then expressed in chart-i
    // coordinates so that rep_i(p) = g(coords_i(p)) * rep_j(coords_j(p))
    RatFuncMatrix jac = chart_jacobian(j, i);
    auto [zj, wj] = chart_map(i, j);
    return jac.substitute(zj, wj);
}

RatFuncMatrix tm1_transition(Chart i, Chart j) {
    return tangent_transition(i, j) * line_transition(-1, i, j);
}

RatFuncMatrix sym2_matrix(const RatFuncMatrix& g) {
    if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("sym2_matrix needs 2x2");
    const RatFunc &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 0), &d = g.at(1, 1);
    RatFunc two = RatFunc::constant(Scalar(2L));
    return RatFuncMatrix{{a * a, a * b, b * b},
                         {two * c * a, d * a + c * b, two * d * b},
                         {c * c, c * d, d * d}};
}

ScalarMatrix sym2_matrix(const ScalarMatrix& g) {
    if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("sym2_matrix needs 2x2");
    const Scalar &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 0), &d = g.at(1, 1);
    Scalar two(2L);
    return ScalarMatrix{{a * a, a * b, b * b},
                        {two * c * a, d * a + c * b, two * d * b},
                        {c * c, c * d, d * d}};
}

RatFuncMatrix sym2_vector_action(const RatFuncMatrix& g) {
    if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("sym2_vector_action needs 2x2");
    const RatFunc &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 0), &d = g.at(1, 1);
    RatFunc two = RatFunc::constant(Scalar(2L));
    return RatFuncMatrix{{a * a, two * a * b, b * b},
                         {a * c, a * d + b * c, b * d},
                         {c * c, two * c * d, d * d}};
}

RatFuncMatrix sym2_triple_transition(Bundle base, Chart i, Chart j) {
    switch (base) {
        case Bundle::T:
        case Bundle::Sym2T: return sym2_vector_action(tangent_transition(i, j));
        case Bundle::Tm1:
        case Bundle::Sym2Tm1: return sym2_vector_action(tm1_transition(i, j));
        default: throw DimensionMismatch("sym2_triple_transition needs a rank-2 base bundle");
    }
}

RatFuncMatrix bundle_transition(Bundle b, Chart i, Chart j) {
    switch (b) {
        case Bundle::O1: {
            RatFuncMatrix m(1, 1);
            m.at(0, 0) = line_transition(1, i, j);
            return m;
        }
        case Bundle::O2: {
            RatFuncMatrix m(1, 1);
            m.at(0, 0) = line_transition(2, i, j);
            return m;
        }
        case Bundle::T: return tangent_transition(i, j);
        case Bundle::Tm1: return tm1_transition(i, j);
        case Bundle::Sym2T: return sym2_triple_transition(Bundle::T, i, j);
        case Bundle::Sym2Tm1: return sym2_triple_transition(Bundle::Tm1, i, j);
    }
    throw DimensionMismatch("unknown bundle");
}

namespace {

RatFunc rf(AffinePoly p) { return RatFunc(std::move(p)); }

RatFunc inv_pow(const AffinePoly& p, int n) {
    RatFunc f = RatFunc::constant(Scalar(1L));
    for (int i = 0; i < n; ++i) f *= rf(p);
    return f.inverse();
}

}  // namespace

std::vector<GoldenTransition> paper_tangent_transitions() {
    const AffinePoly z = AffinePoly::var_z();
    const AffinePoly w = AffinePoly::var_w();
    std::vector<GoldenTransition> out;
    // g'_12 = [[1/w, -z/w^2], [0, -1/w^2]]
    out.push_back({"g12", Chart::c0, Chart::c1,
                   RatFuncMatrix{{inv_pow(w, 1), -rf(z) * inv_pow(w, 2)},
                                 {RatFunc{}, -inv_pow(w, 2)}}});
    // g'_23 = [[-1/z^2, 0], [-z/w^2, 1/z]]   (as displayed; see the
    // comparison report for the suspect (2,1) entry)
    out.push_back({"g23", Chart::c1, Chart::c2,
                   RatFuncMatrix{{-inv_pow(z, 2), RatFunc{}},
                                 {-rf(z) * inv_pow(w, 2), inv_pow(z, 1)}}});
    // g'_31 = [[-w/z^2, 1/z], [-1/z^2, 0]]
    out.push_back({"g31", Chart::c2, Chart::c0,
                   RatFuncMatrix{{-rf(w) * inv_pow(z, 2), inv_pow(z, 1)},
                                 {-inv_pow(z, 2), RatFunc{}}}});
    return out;
}

std::vector<GoldenComparison> compare_paper_transitions(std::uint64_t seed, int points) {
    Gen gen(SplitMix64::substream(seed, 0x601DULL));
    std::vector<GoldenComparison> out;
    for (const auto& golden : paper_tangent_transitions()) {
        GoldenComparison cmp;
        cmp.name = golden.name;
        for (auto& row : cmp.forward_entry) row.fill(true);
        for (auto& row : cmp.reverse_entry) row.fill(true);
        RatFuncMatrix fwd_true = tangent_transition(golden.b, golden.a);   // v_b = g v_a
        RatFuncMatrix rev_true = tangent_transition(golden.a, golden.b);   // v_a = g v_b
        int done = 0;
        while (done < points) {
            PointP2 p = gen.point_all_coords_nonzero();
            try {
                auto ca = p.coords(golden.a);
                auto cb = p.coords(golden.b);
                ScalarMatrix truth_fwd = fwd_true.eval(cb.first, cb.second);
                ScalarMatrix truth_rev = rev_true.eval(ca.first, ca.second);
                ScalarMatrix disp_fwd = golden.matrix.eval(ca.first, ca.second);
                ScalarMatrix disp_rev = golden.matrix.eval(cb.first, cb.second);
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c) {
                        if (disp_fwd.at(r, c) != truth_fwd.at(r, c))
                            cmp.forward_entry[r][c] = false;
                        if (disp_rev.at(r, c) != truth_rev.at(r, c))
                            cmp.reverse_entry[r][c] = false;
                    }
                ++done;
            } catch (const SingularEvaluationPoint&) {
                continue;  // resample
            }
        }
        cmp.points = done;
        cmp.forward_match = true;
        cmp.reverse_match = true;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                cmp.forward_match = cmp.forward_match && cmp.forward_entry[r][c];
                cmp.reverse_match = cmp.reverse_match && cmp.reverse_entry[r][c];
            }
        out.push_back(std::move(cmp));
    }
    return out;
}

CocycleReport cocycle_check(Bundle b, std::uint64_t seed, int points) {
    Gen gen(SplitMix64::substream(seed, 0xc0cULL));
    CocycleReport report;
    report.bundle = b;
    const int n = bundle_transition(b, Chart::c0, Chart::c1).rows();
    const ScalarMatrix id = ScalarMatrix::identity(n);
    int done = 0;
    while (done < points) {
        PointP2 p = gen.point_all_coords_nonzero();
        try {
            ScalarMatrix prod = ScalarMatrix::identity(n);
            const std::array<std::pair<Chart, Chart>, 3> cycle{
                {{Chart::c0, Chart::c1}, {Chart::c1, Chart::c2}, {Chart::c2, Chart::c0}}};
            for (auto [i, j] : cycle) {
                auto ci = p.coords(i);
                prod = prod * bundle_transition(b, i, j).eval(ci.first, ci.second);
            }
            if (prod != id) ++report.failures;
            for (Chart i : kAllCharts)
                for (Chart j : kAllCharts) {
                    if (i == j) continue;
                    auto ci = p.coords(i);
                    auto cj = p.coords(j);
                    ScalarMatrix gij = bundle_transition(b, i, j).eval(ci.first, ci.second);
                    ScalarMatrix gji = bundle_transition(b, j, i).eval(cj.first, cj.second);
                    if (gij * gji != id) report.inverse_ok = false;
                }
            ++done;
        } catch (const SingularEvaluationPoint&) {
            continue;  // point on a coordinate hyperplane: resample
        }
    }
    report.points = done;
    return report;
}

namespace {

bool glue_pair_rep(const std::pair<AffinePoly, AffinePoly>& rep_i,
                   const std::pair<AffinePoly, AffinePoly>& rep_j, const RatFuncMatrix& g,
                   Chart i, Chart j) {
    auto [zj, wj] = chart_map(i, j);
    RatFunc r1 = RatFunc(rep_j.first).substitute(zj, wj);
    RatFunc r2 = RatFunc(rep_j.second).substitute(zj, wj);
    RatFunc t1 = g.at(0, 0) * r1 + g.at(0, 1) * r2;
    RatFunc t2 = g.at(1, 0) * r1 + g.at(1, 1) * r2;
    return t1 == RatFunc(rep_i.first) && t2 == RatFunc(rep_i.second);
}

}  // namespace

bool glue_check(const SectionOk& s) {
    for (Chart i : kAllCharts)
        for (Chart j : kAllCharts) {
            if (i == j) continue;
            auto [zj, wj] = chart_map(i, j);
            RatFunc transported =
                line_transition(s.k, i, j) * RatFunc(s.local_rep(j)).substitute(zj, wj);
            if (transported != RatFunc(s.local_rep(i))) return false;
        }
    return true;
}

bool glue_check(const SectionTm1& s) {
    for (Chart i : kAllCharts)
        for (Chart j : kAllCharts) {
            if (i == j) continue;
            if (!glue_pair_rep(s.local_rep(i), s.local_rep(j), tm1_transition(i, j), i, j))
                return false;
        }
    return true;
}

bool glue_check(const SectionT& s) {
    for (Chart i : kAllCharts)
        for (Chart j : kAllCharts) {
            if (i == j) continue;
            if (!glue_pair_rep(s.local_rep(i), s.local_rep(j), tangent_transition(i, j), i, j))
                return false;
        }
    return true;
}

namespace {

std::array<RatFunc, 3> transport_triple(const Sym2Triple& t0, Bundle base, Chart i) {
    RatFuncMatrix g = sym2_triple_transition(base, i, Chart::c0);
    auto [z0, w0] = chart_map(i, Chart::c0);
    std::array<RatFunc, 3> tj{RatFunc(t0.t[0]).substitute(z0, w0),
                              RatFunc(t0.t[1]).substitute(z0, w0),
                              RatFunc(t0.t[2]).substitute(z0, w0)};
    std::array<RatFunc, 3> out;
    for (int r = 0; r < 3; ++r) {
        RatFunc acc;
        for (int c = 0; c < 3; ++c) acc += g.at(r, c) * tj[c];
        out[r] = acc;
    }
    return out;
}

}  // namespace

bool glue_check_triple(const Sym2Triple& t0, Bundle base,
                       const std::array<const Sym2Triple*, 3>* direct) {
    for (Chart i : {Chart::c1, Chart::c2}) {
        auto transported = transport_triple(t0, base, i);
        for (int c = 0; c < 3; ++c) {
            if (direct && (*direct)[chart_index(i)]) {
                if (transported[c] != RatFunc((*direct)[chart_index(i)]->t[c])) return false;
            } else if (!transported[c].as_polynomial()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cohiggs
