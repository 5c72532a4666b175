#include "qforms/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qforms/localsolve.hpp"

namespace qforms {

namespace {

int floor_div2(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

std::pair<int, int> degree_bounds(const EquationInstance& inst) {
    if (inst.n().is_zero())
        throw std::invalid_argument("degree bounds require n != 0");
    if (!is_imaginary(inst))
        throw std::invalid_argument("degree bounds require the imaginary hypothesis");
    int bx = inst.n().degree() / 2;
    int by = floor_div2(inst.n().degree() - inst.d().degree());
    return {bx, by};
}

SolveReport enumerate_solutions(const EquationInstance& inst, std::optional<int> bound_override) {
    auto t0 = std::chrono::steady_clock::now();
    SolveReport report;
    report.stage = "oracle";
    const Fq& F = inst.field();

    if (inst.n().is_zero()) {
        Poly z = Poly::zero(F);
        report.verdict = Verdict::Solvable;
        report.witnesses.push_back({z, z, z, z});
        report.complete = true;
        report.stage = "trivial";
        report.elapsed = std::chrono::steady_clock::now() - t0;
        return report;
    }

    bool imaginary = is_imaginary(inst);
    int ybound;
    if (imaginary) {
        int natural = degree_bounds(inst).second;
        ybound = bound_override ? *bound_override : natural;
        report.complete = !bound_override || *bound_override >= natural;
    } else {
        if (!bound_override)
            throw std::invalid_argument(
                "bound_override required: degree bounds need the imaginary hypothesis");
        ybound = *bound_override;
        report.complete = false;
    }

    if (ybound >= 0) {
        double count = 1;
        for (int i = 0; i <= ybound; ++i) count *= static_cast<double>(F.q());
        if (count > 4e6) throw std::runtime_error("oracle search space too large");
    }

    Poly two_a = inst.a() * 2;
    // Odometer over all yt with deg <= ybound (just yt = 0 when negative).
    std::vector<std::int64_t> cs(static_cast<size_t>(std::max(ybound, -1) + 1), 0);
    for (;;) {
        Poly yt(F, cs);
        Poly rhs = inst.n() - inst.d() * yt * yt;
        if (auto root = poly_sqrt(rhs)) {
            Poly candidates[2] = {*root, -*root};
            int ncand = (*root == -*root) ? 1 : 2;
            for (int i = 0; i < ncand; ++i) {
                const Poly& xt = candidates[i];
                auto [x, rem] = divrem(xt - inst.b() * yt, two_a);
                if (rem.is_zero()) report.witnesses.push_back({x, yt, xt, yt});
            }
        }
        size_t i = 0;
        while (i < cs.size() && ++cs[i] == F.q()) cs[i++] = 0;
        if (i == cs.size()) break;
    }

    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness& a, const Witness& b) {
                  int cy = Poly::cmp(a.y, b.y);
                  if (cy != 0) return cy < 0;
                  return Poly::cmp(a.x, b.x) < 0;
              });

    if (!report.witnesses.empty())
        report.verdict = Verdict::Solvable;
    else
        report.verdict = report.complete ? Verdict::Unsolvable : Verdict::UnknownWithinBound;
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

bool is_solvable_bruteforce(const EquationInstance& inst) {
    return enumerate_solutions(inst).verdict == Verdict::Solvable;
}

}  // namespace qforms
