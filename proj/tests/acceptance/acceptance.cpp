// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Run with --skip-optional to leave out the B_3 separator check.

#include "../support/brute.hpp"

#include <recolor/recolor.hpp>

#include <chrono>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace recolor;
using namespace recolor::gadgets;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string & why)
    {
        if (pass)
            detail << "first failure: " << why << "; ";
        pass = false;
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string show(const Graph & g)
{
    std::string s = "n=" + std::to_string(g.size()) + " E={";
    for (const auto & e : g.edges())
        s += std::to_string(e.u) + std::to_string(e.v) + " ";
    return s + "}";
}

// Criteria 1 and 9 share one sweep.
struct SweepOutcome {
    Verdict equivalence;
    Verdict instrumentation;
};

SweepOutcome sweep()
{
    SweepOutcome out;
    std::size_t cases = 0, yes = 0, witnesses = 0, max_calls = 0;
    double worst_ratio = 0;
    const auto start = Clock::now();
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const Graph & g : brute::all_graphs(n)) {
            for (Color k = 2; k <= 3; ++k) {
                const auto all = brute::colorings(g, k);
                for (const auto & a : all) {
                    const Coloring alpha(a);
                    for (const auto & b : all) {
                        const Coloring beta(b);
                        const auto oracle = oracle_distance(g, k, alpha, beta);
                        for (std::size_t ell = 0; ell <= 5; ++ell) {
                            ++cases;
                            const bool expected = oracle.distance && *oracle.distance <= ell;
                            yes += expected;
                            const auto where = [&] {
                                return show(g) + " k=" + std::to_string(k) + " " + to_string(alpha) + "->"
                                    + to_string(beta) + " ell=" + std::to_string(ell);
                            };

                            const auto xp = solve_xp(g, k, alpha, beta, ell);
                            if ((xp.status == SearchStatus::found) != expected)
                                out.equivalence.fail("xp disagrees at " + where());
                            // Colorings generated in the last pass <= sum_{d<=ell} (kn)^d.
                            double bound = 0;
                            for (std::size_t d = 0; d <= ell; ++d)
                                bound += std::pow(double(k * n), double(d));
                            if (double(xp.generated) > bound)
                                out.equivalence.fail("xp exceeded its node bound at " + where());

                            FptOptions fo;
                            fo.check_invariants = true;
                            const auto fpt = recolor::recolor(g, k, ell, alpha, beta, fo);
                            if ((fpt.status == SearchStatus::found) != expected)
                                out.equivalence.fail("fpt disagrees at " + where());

                            for (const auto * w : {&xp.witness, &fpt.witness}) {
                                if (!*w)
                                    continue;
                                ++witnesses;
                                const auto v = verify_sequence(g, k, alpha, beta, ell, **w);
                                if (!v)
                                    out.equivalence.fail("invalid witness at " + where() + ": " + v.reason);
                            }
                            if (xp.witness && oracle.distance && xp.witness->size() != *oracle.distance)
                                out.equivalence.fail("xp witness is not shortest at " + where());

                            const double call_bound = fpt_call_bound(k, ell);
                            max_calls = std::max(max_calls, fpt.stats.recursive_calls);
                            worst_ratio = std::max(worst_ratio, double(fpt.stats.recursive_calls) / call_bound);
                            if (double(fpt.stats.recursive_calls) > call_bound)
                                out.instrumentation.fail("call bound exceeded at " + where());
                            if (fpt.stats.max_base_weight > ell)
                                out.instrumentation.fail("base case entered over budget at " + where());
                            if (!fpt.stats.weight_monotone)
                                out.instrumentation.fail("guess weight did not grow at " + where());
                        }
                    }
                }
            }
        }
    }
    out.equivalence.detail << cases << " cases (" << yes << " YES), " << witnesses << " witnesses verified, "
                           << std::fixed << std::setprecision(1) << seconds_since(start) << " s";
    out.instrumentation.detail << "max recursive calls " << max_calls << ", worst calls/2^{k(l+1)} = "
                               << std::scientific << std::setprecision(2) << worst_ratio;
    return out;
}

Verdict criterion_2()
{
    Verdict v;
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto bk = build_bk(k);
        std::vector<Color> base, spare;
        for (std::size_t i = 1; i <= k; ++i)
            base.push_back(Color(i));
        for (std::size_t i = 1; i < k; ++i)
            spare.push_back(Color(k + i));
        const auto seq = bk_sequence(k, base, spare);
        const Color q = Color(2 * k - 1);
        const auto verdict = verify_sequence(bk.graph, q, bk.alpha, bk.beta, 2 * k * k, seq);
        if (!verdict)
            v.fail("k=" + std::to_string(k) + ": " + verdict.reason);
        const auto counts = brute::distinct_per_prefix(bk.alpha, seq);
        const auto peak = *std::max_element(counts.begin(), counts.end());
        if (peak > q)
            v.fail("k=" + std::to_string(k) + " uses more than 2k-1 colors");
        if (k >= 2 && peak != q)
            v.fail("k=" + std::to_string(k) + " never uses 2k-1 colors");
        v.detail << "k=" << k << ":len " << seq.size() << "/" << 2 * k * k << " peak " << peak << "; ";
    }
    return v;
}

Verdict criterion_3(bool optional_part)
{
    Verdict v;
    const auto b2 = build_bk(2);
    const auto sep = separator_holds(b2.graph, 3, b2.alpha, b2.beta, uses_at_least(3));
    if (sep.holds != true)
        v.fail("B_2 separator does not hold");
    const auto d = oracle_distance(b2.graph, 3, b2.alpha, b2.beta);
    if (d.distance != std::optional<std::size_t>(3))
        v.fail("B_2 distance is not 3");
    v.detail << "B_2: separator holds, distance " << (d.distance ? std::to_string(*d.distance) : "none");
    if (optional_part) {
        const auto b3 = build_bk(3);
        SearchLimits limits;
        limits.deadline = Clock::now() + std::chrono::seconds(60);
        const auto start = Clock::now();
        const auto sep3 = separator_holds(b3.graph, 5, b3.alpha, b3.beta, uses_at_least(5), limits);
        if (!sep3.holds)
            v.detail << "; B_3 (q=5) budget exhausted after " << sep3.explored << " states (optional)";
        else if (!*sep3.holds)
            v.fail("B_3 separator does not hold");
        else
            v.detail << "; B_3 (q=5): separator holds, " << sep3.explored << " states, " << std::fixed
                     << std::setprecision(1) << seconds_since(start) << " s";
    }
    return v;
}

std::vector<ColorSet> proper_subsets_of_four()
{
    std::vector<ColorSet> out;
    for (unsigned mask = 1; mask < 15; ++mask) {
        ColorSet s;
        for (Color c = 1; c <= 4; ++c)
            if (mask >> (c - 1) & 1)
                s.insert(c);
        out.push_back(s);
    }
    return out;
}

Verdict criterion_4()
{
    Verdict v;
    std::size_t paths = 0, shifts = 0, stuck = 0, flagged = 0, bad_equal = 0;
    std::set<std::string> bad_inputs;
    const auto subsets = proper_subsets_of_four();
    for (const auto & lu : subsets)
        for (const auto & lv : subsets)
            for (Color a : lu.to_vector())
                for (Color b : lv.to_vector()) {
                    ++paths;
                    const auto fp = build_forbidding_path(lu, lv, a, b);
                    flagged += !fp.shift_complete;
                    const std::string tag = "Lu=" + to_string(lu) + " Lv=" + to_string(lv) + " (a,b)=("
                        + std::to_string(a) + "," + std::to_string(b) + ")";
                    // Admissible pairs by full enumeration of the path's L-colorings.
                    const auto all = brute::colorings(fp.path, fp.lists);
                    for (Color x : lu.to_vector())
                        for (Color y : lv.to_vector()) {
                            bool realized = false;
                            for (const auto & c : all)
                                realized |= c.front() == x && c.back() == y;
                            if (realized != (x != a || y != b))
                                v.fail(tag + " wrong admissibility of (" + std::to_string(x) + ","
                                       + std::to_string(y) + ")");
                        }
                    // Every shifting obligation from every L-coloring.
                    for (const auto & c : all) {
                        const Coloring gamma(c);
                        for (Color x : lu.to_vector())
                            for (Color y : lv.to_vector()) {
                                if (x == a && y == b)
                                    continue;
                                if (x != c.front() && y != c.back())
                                    continue;
                                ++shifts;
                                RecolorSequence seq;
                                try {
                                    seq = shift_path(fp, gamma, {x, y});
                                } catch (const DomainError &) {
                                    ++stuck;
                                    if (bad_inputs.insert(tag).second)
                                        bad_equal += a == b;
                                    continue;
                                }
                                Coloring end = gamma;
                                std::vector<int> touched(7, 0);
                                bool ok = true;
                                for (std::size_t i = 0; i < seq.size(); ++i) {
                                    const auto [w, col] = seq[i];
                                    if (w == 0 || w == 6)
                                        ok &= i + 1 == seq.size();
                                    else
                                        ok &= ++touched[w] <= 1;
                                }
                                const auto verdict = verify_sequence(fp.path, fp.lists, gamma,
                                                                     final_coloring(gamma, seq), 6, seq);
                                end = final_coloring(gamma, seq);
                                ok &= static_cast<bool>(verdict) && end[0] == x && end[6] == y;
                                if (!ok)
                                    v.fail(tag + " shift from " + to_string(gamma) + " to (" + std::to_string(x)
                                           + "," + std::to_string(y) + ")");
                            }
                    }
                }
    if (!bad_inputs.empty())
        v.fail(std::to_string(bad_inputs.size()) + " inputs (" + std::to_string(bad_equal) + " with a=b, "
               + std::to_string(flagged) + " flagged shift-incomplete by the builder) leave " + std::to_string(stuck)
               + " shift obligations undischarged, e.g. " + *bad_inputs.begin());
    v.detail << paths << " paths, " << shifts - stuck << " of " << shifts << " shift obligations discharged";
    return v;
}

Verdict criterion_5()
{
    Verdict v;
    std::mt19937 rng(20141103);
    std::size_t done = 0, unreachable = 0, attempts = 0;
    while (done < 40 && attempts < 10000) {
        ++attempts;
        std::uniform_int_distribution<std::size_t> size(1, 4);
        const Graph g = brute::random_graph(rng, size(rng), 0.5);
        std::vector<ColorSet> lists;
        for (std::size_t i = 0; i < g.size(); ++i)
            lists.push_back(brute::random_list(rng, 4));
        const ColorLists cl(4, lists);
        const auto all = brute::colorings(g, cl);
        if (all.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        Instance inst;
        inst.graph = g;
        inst.k = 4;
        inst.lists = cl;
        inst.ell = 5;
        inst.alpha = Coloring(all[pick(rng)]);
        inst.beta = Coloring(all[pick(rng)]);
        // Bias toward unreachable pairs: every third instance retries for a frozen pair.
        const auto before = oracle_distance(g, cl, inst.alpha, inst.beta);
        if (done % 3 == 2 && before.distance)
            continue;
        const Instance plain = list_to_plain(inst, 4);
        const auto after = oracle_distance(plain.graph, plain.effective_lists(), plain.alpha, plain.beta);
        if (before.distance != after.distance)
            v.fail("distance changed on " + show(g) + " " + to_string(inst.alpha) + "->" + to_string(inst.beta));
        unreachable += !before.distance;
        ++done;
    }
    if (done < 20)
        v.fail("only " + std::to_string(done) + " instances generated");
    v.detail << done << " random list instances, " << unreachable << " unreachable, distances identical";
    return v;
}

Verdict criterion_6()
{
    Verdict v;
    const Graph edge(2, {{0, 1}});
    const auto np = np_reduce(edge);
    const auto & gadget = np.gadgets.front();
    const ColorLists & lists = *np.instance.lists;

    // The gadget alone: the five roles plus internal vertices of its paths.
    std::vector<Vertex> keep{gadget.u, gadget.v, gadget.x, gadget.y, gadget.z};
    for (std::size_t p : gadget.paths)
        for (std::size_t i = 1; i + 1 < np.paths[p].vertices.size(); ++i)
            keep.push_back(np.paths[p].vertices[i]);
    std::sort(keep.begin(), keep.end());
    const Graph sub = np.instance.graph.induced(keep);
    std::vector<ColorSet> sub_lists;
    for (Vertex w : keep)
        sub_lists.push_back(lists[w]);
    const ColorLists sl(4, sub_lists);
    const auto local = [&](Vertex w) { return Vertex(std::lower_bound(keep.begin(), keep.end(), w) - keep.begin()); };

    std::size_t total = 0, extendable = 0;
    std::map<std::pair<Color, Color>, bool> unequal_ok;
    for (Color cu : lists[gadget.u].to_vector())
        for (Color cv : lists[gadget.v].to_vector())
            for (Color cx : lists[gadget.x].to_vector())
                for (Color cy : lists[gadget.y].to_vector())
                    for (Color cz : lists[gadget.z].to_vector()) {
                        ++total;
                        const bool abstract = gadget_abstraction_check(np, 0, {cu, cv, cx, cy, cz});
                        std::vector<Color> fixed(keep.size(), 0);
                        fixed[local(gadget.u)] = cu;
                        fixed[local(gadget.v)] = cv;
                        fixed[local(gadget.x)] = cx;
                        fixed[local(gadget.y)] = cy;
                        fixed[local(gadget.z)] = cz;
                        const bool concrete = brute::extendable(sub, sl, fixed);
                        if (abstract != concrete)
                            v.fail("abstraction disagrees with backtracking on (" + std::to_string(cu) + ","
                                   + std::to_string(cv) + "," + std::to_string(cx) + "," + std::to_string(cy)
                                   + "," + std::to_string(cz) + ")");
                        if (!abstract)
                            continue;
                        ++extendable;
                        if (cu == cv && cz != 4)
                            v.fail("equal endpoints with z=" + std::to_string(cz) + " extend");
                        if (cu != cv && (cz == 1 || cz == 2))
                            unequal_ok[{cu, cv}] = true;
                    }
    for (Color cu = 1; cu <= 3; ++cu)
        for (Color cv = 1; cv <= 3; ++cv)
            if (cu != cv && !unequal_ok[{cu, cv}])
                v.fail("no extendable quintuple with z in {1,2} for (" + std::to_string(cu) + ","
                       + std::to_string(cv) + ")");
    if (total != 162)
        v.fail(std::to_string(total) + " quintuples instead of 162");
    v.detail << total << " quintuples, " << extendable << " extendable, abstraction matches backtracking";
    return v;
}

Verdict criterion_7()
{
    Verdict v;
    const std::vector<std::pair<std::string, Graph>> sources{
        {"K3", Graph(3, {{0, 1}, {0, 2}, {1, 2}})},
        {"K2", Graph(2, {{0, 1}})},
        {"P3", Graph(3, {{0, 1}, {1, 2}})},
    };
    for (const auto & [name, g] : sources) {
        const auto np = np_reduce(g);
        const auto & inst = np.instance;
        std::size_t count = 0, longest = 0;
        for (const auto & c3 : brute::colorings(g, 3)) {
            const auto seq = np_witness(np, Coloring(c3));
            const auto verdict = verify_sequence(inst.graph, *inst.lists, inst.alpha, inst.beta, inst.ell, seq);
            if (!verdict)
                v.fail(name + " with " + to_string(Coloring(c3)) + ": " + verdict.reason);
            if (inst.ell != 4 * inst.graph.size())
                v.fail(name + ": ell is not 4|V'|");
            longest = std::max(longest, seq.size());
            ++count;
        }
        v.detail << name << ": " << count << " colorings, |V'|=" << inst.graph.size() << ", longest "
                 << longest << " <= " << inst.ell << "; ";
    }
    return v;
}

Verdict criterion_8()
{
    Verdict v;
    const auto w = w1_reduce(Graph(2, {{0, 1}}), 2);
    const auto & inst = w.instance;
    const auto seq = w1_witness(w, {0});
    const auto verdict = verify_sequence(inst.graph, inst.k, inst.alpha, inst.beta, inst.ell, seq);
    if (!verdict)
        v.fail(verdict.reason);
    if (seq.size() > 10)
        v.fail("witness longer than 2(t-1)+2t^2 = 10");
    if (inst.ell != 12)
        v.fail("ell is not 12");
    if (!colorguard_check(w, seq))
        v.fail("color guards violated");
    v.detail << "|V'|=" << inst.graph.size() << ", k=" << inst.k << ", witness length " << seq.size()
             << " <= 10 <= ell=" << inst.ell << ", guards respected";
    return v;
}

Verdict criterion_10()
{
    Verdict v;
    const Graph one(1, {});
    const Coloring alpha{1}, beta{2};
    FptOptions corrected;
    corrected.subset_bound = SubsetBound::corrected;
    const auto fixed = recolor::recolor(one, 2, 1, alpha, beta, corrected);
    FptOptions literal;
    literal.subset_bound = SubsetBound::literal;
    const auto literal_run = recolor::recolor(one, 2, 1, alpha, beta, literal);
    const auto oracle = oracle_distance(one, 2, alpha, beta);
    if (fixed.status != SearchStatus::found)
        v.fail("corrected bound answers NO");
    if (literal_run.status != SearchStatus::not_found)
        v.fail("literal bound does not answer NO");
    if (oracle.distance != std::optional<std::size_t>(1))
        v.fail("oracle distance is not 1");
    v.detail << "corrected bound: " << to_string(fixed.status) << ", literal bound: " << to_string(literal_run.status)
             << ", oracle distance 1 (literal bound is wrong here), build default "
             << (default_subset_bound == SubsetBound::literal ? "literal" : "corrected");
    return v;
}

} // namespace

int main(int argc, char ** argv)
{
    bool optional_part = true;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--skip-optional") == 0)
            optional_part = false;

    bool all = true;
    const auto report = [&](int id, const char * title, Verdict v) {
        all &= v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " | " << v.detail.str()
                  << std::endl;
    };

    auto swept = sweep();
    report(1, "cross-solver exhaustive equivalence (n<=4, k in {2,3}, ell<=5)", std::move(swept.equivalence));
    report(2, "B_k sequence within 2k^2 steps and 2k-1 colors (k=1..6)", criterion_2());
    report(3, "B_k needs 2k-1 colors: separator and distance on B_2", criterion_3(optional_part));
    report(4, "forbidding paths: admissible pairs and shifts, all legal inputs", criterion_4());
    report(5, "list-to-plain transform preserves distance", criterion_5());
    report(6, "edge gadget abstraction over all 162 role assignments", criterion_6());
    report(7, "3-colorability witness on K3, K2, P3", criterion_7());
    report(8, "independent-set witness and color guards (single edge, t=2)", criterion_8());
    report(9, "guessing-stage call bound and base-case weight on the sweep", std::move(swept.instrumentation));
    report(10, "single-vertex regression for the subset-size bound", criterion_10());
    return all ? 0 : 1;
}
