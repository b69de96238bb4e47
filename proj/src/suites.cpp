#include "foresthopf/suites.hpp"

#include <atomic>
#include <chrono>
#include <memory>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "foresthopf/enumerator.hpp"
#include "foresthopf/hopf.hpp"
#include "foresthopf/polymodel.hpp"
#include "foresthopf/textio.hpp"

namespace foresthopf {

namespace {

// All forests with 0..max vertices, addressed by one flat index.
struct BasisSpace {
    std::vector<ForestEnumerator> enums;
    std::vector<std::uint64_t> offsets;
    std::uint64_t total = 0;

    BasisSpace(std::size_t max, const std::vector<std::string>& alphabet) {
        for (std::size_t n = 0; n <= max; ++n) {
            enums.emplace_back(n, alphabet);
            offsets.push_back(total);
            total += enums.back().total();
        }
    }

    Forest at(std::uint64_t idx) const {
        std::size_t n = enums.size() - 1;
        while (idx < offsets[n]) --n;
        return enums[n].at(idx - offsets[n]);
    }
};

// All ordered pairs with |F1| + |F2| <= max.
struct PairSpace {
    struct Block {
        std::uint64_t offset;
        std::size_t n1, n2;
        std::uint64_t stride;  // count of second component
    };
    std::vector<ForestEnumerator> enums;
    std::vector<Block> blocks;
    std::uint64_t total = 0;

    PairSpace(std::size_t max, const std::vector<std::string>& alphabet) {
        for (std::size_t n = 0; n <= max; ++n) enums.emplace_back(n, alphabet);
        for (std::size_t n1 = 0; n1 <= max; ++n1)
            for (std::size_t n2 = 0; n1 + n2 <= max; ++n2) {
                const std::uint64_t c = enums[n1].total() * enums[n2].total();
                blocks.push_back({total, n1, n2, enums[n2].total()});
                total += c;
            }
    }

    std::pair<Forest, Forest> at(std::uint64_t idx) const {
        std::size_t b = blocks.size() - 1;
        while (idx < blocks[b].offset) --b;
        const Block& blk = blocks[b];
        const std::uint64_t local = idx - blk.offset;
        return {enums[blk.n1].at(local / blk.stride),
                enums[blk.n2].at(local % blk.stride)};
    }
};

// Self-test mutant: drop the largest term of delta_eps when there are at
// least two, so the law suites must catch it.
Tensor2 corrupted_delta(const Forest& f) {
    Tensor2 t = delta_eps(f);
    if (t.terms().size() >= 2) {
        Tensor2 out;
        auto last = std::prev(t.terms().end());
        for (auto it = t.terms().begin(); it != last; ++it)
            out.add_term(it->first.first, it->first.second, it->second);
        return out;
    }
    return t;
}

DeltaFn pick_delta(const SuiteOptions& opts) {
    if (opts.mutate_delta) return corrupted_delta;
    return [](const Forest& f) { return delta_eps(f); };
}

// (id (x) B+) t
Tensor2 graft_right(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t.terms())
        out.add_term(k.first, Forest(bplus(k.second)), c);
    return out;
}

std::string tensor3_text(const Tensor3& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : t.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += rational_to_string(c) + " * ";
        out += k[0].text() + " (x) " + k[1].text() + " (x) " + k[2].text();
    }
    return out;
}

struct SuitePlan {
    std::uint64_t count = 0;
    CheckKernel kernel;
};

SuitePlan plan_coassoc(const SuiteOptions& opts, const DeltaFn& delta) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space, delta](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const Tensor2 t = delta(f);
                const Tensor3 lhs = apply_delta_right(t, delta);
                const Tensor3 rhs = apply_delta_left(t, delta);
                if (lhs == rhs) return {};
                return "coassociativity fails on F = " + f.text() +
                       ": (id x d)d = " + tensor3_text(lhs) +
                       " but (d x id)d = " + tensor3_text(rhs);
            }};
}

SuitePlan plan_leibniz(const SuiteOptions& opts, const DeltaFn& delta) {
    auto space = std::make_shared<PairSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space, delta](std::uint64_t idx) -> std::string {
                auto [f1, f2] = space->at(idx);
                const Tensor2 lhs = delta(concat(f1, f2));
                const Tensor2 rhs =
                    act_left(LinComb(f1), delta(f2)) + act_right(delta(f1), LinComb(f2));
                if (lhs == rhs) return {};
                return "derivation law fails on F1 = " + f1.text() +
                       ", F2 = " + f2.text() + ": d(F1 F2) = " + serialize_tensor2(lhs) +
                       " but F1.d(F2) + d(F1).F2 = " + serialize_tensor2(rhs);
            }};
}

SuitePlan plan_cocycle(const SuiteOptions& opts, const DeltaFn& delta) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space, delta](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const Tensor2 lhs = delta(Forest(bplus(f)));
                Tensor2 rhs(f, Forest());
                rhs += graft_right(delta(f));
                if (lhs == rhs) return {};
                return "cocycle condition fails on F = " + f.text() +
                       ": d(B+(F)) = " + serialize_tensor2(lhs) +
                       " but F (x) 1 + (id x B+)d(F) = " + serialize_tensor2(rhs);
            }};
}

SuitePlan plan_equiv(const SuiteOptions& opts, const DeltaFn& delta) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space, delta](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const Tensor2 rec = delta(f);
                const Tensor2 comb = delta_eps_comb(f);
                if (rec == comb) return {};
                return "recursive and combinatorial coproducts differ on F = " +
                       f.text() + ": recursive = " + serialize_tensor2(rec) +
                       ", combinatorial = " + serialize_tensor2(comb);
            }};
}

SuitePlan plan_grading(const SuiteOptions& opts, const DeltaFn& delta) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space, delta](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const Tensor2 t = delta(f);
                if (f.empty())
                    return t.is_zero() ? std::string()
                                       : "delta(1) must vanish but is " +
                                             serialize_tensor2(t);
                for (const auto& [k, c] : t.terms()) {
                    (void)c;
                    if (k.first.vertex_count() + k.second.vertex_count() !=
                        f.vertex_count() - 1)
                        return "grading fails on F = " + f.text() + ": term " +
                               k.first.text() + " (x) " + k.second.text() +
                               " has |B|+|R| != |F|-1";
                }
                return {};
            }};
}

SuitePlan plan_termcount(const SuiteOptions& opts, const DeltaFn& delta) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space, delta](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const Tensor2 t = delta(f);
                if (t.terms().size() != f.vertex_count())
                    return "term count fails on F = " + f.text() + ": " +
                           std::to_string(t.terms().size()) + " terms for " +
                           std::to_string(f.vertex_count()) + " vertices";
                for (const auto& [k, c] : t.terms()) {
                    (void)k;
                    if (c != 1)
                        return "non-unit coefficient in delta(" + f.text() +
                               "): " + serialize_tensor2(t);
                }
                return {};
            }};
}

SuitePlan plan_nilpotency(const SuiteOptions& opts) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const std::size_t bound = f.vertex_count() + 1;
                const LinComb v = conv_power(d_eps_endo(), bound)(f);
                if (!v.is_zero())
                    return "convolution power " + std::to_string(bound) +
                           " of D_eps does not vanish on F = " + f.text() + ": " +
                           serialize_lincomb(v);
                if (nilpotency_witness(f) > bound)
                    return "nilpotency witness exceeds |F|+1 on F = " + f.text();
                return {};
            }};
}

SuitePlan plan_antipode(const SuiteOptions& opts) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                if (!antipode_check(f))
                    return "antipode equations fail on F = " + f.text() +
                           ": S(F) = " + serialize_lincomb(antipode(f));
                return {};
            }};
}

SuitePlan plan_morphism(const SuiteOptions& opts) {
    auto space = std::make_shared<BasisSpace>(opts.max_vertices, opts.alphabet);
    return {space->total, [space](std::uint64_t idx) -> std::string {
                const Forest f = space->at(idx);
                const Poly image = phi_bar_kx(f);
                if (image != Poly::monomial(f.vertex_count()))
                    return "phi(F) != x^|F| on F = " + f.text() + ": got " +
                           image.text();
                if (!morphism_check(f))
                    return "morphism compatibility fails on F = " + f.text();
                return {};
            }};
}

// Foissy's coproduct is only defined on undecorated forests, so this suite
// always runs over the empty alphabet.
SuitePlan plan_foissy(const SuiteOptions& opts) {
    auto single = std::make_shared<BasisSpace>(opts.max_vertices, std::vector<std::string>{});
    auto pairs = std::make_shared<PairSpace>(opts.max_vertices, std::vector<std::string>{});
    const std::uint64_t split = single->total;
    const DeltaFn df = [](const Forest& f) { return delta_foissy(f); };
    return {single->total + pairs->total,
            [single, pairs, split, df](std::uint64_t idx) -> std::string {
                if (idx < split) {
                    const Forest f = single->at(idx);
                    const Tensor2 t = df(f);
                    if (apply_delta_right(t, df) == apply_delta_left(t, df)) return {};
                    return "Foissy coassociativity fails on F = " + f.text();
                }
                auto [f1, f2] = pairs->at(idx - split);
                const Tensor2 lhs = df(concat(f1, f2));
                Tensor2 rhs = act_left(LinComb(f1), df(f2)) + act_right(df(f1), LinComb(f2));
                rhs.add_term(f1, f2, -1);
                if (lhs == rhs) return {};
                return "Foissy compatibility fails on F1 = " + f1.text() +
                       ", F2 = " + f2.text();
            }};
}

}  // namespace

ScanOutcome scan_serial(std::uint64_t count, const CheckKernel& kernel) {
    ScanOutcome out;
    out.cases = count;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::string msg = kernel(idx);
        if (!msg.empty()) {
            out.passed = false;
            out.counterexample = std::move(msg);
            return out;
        }
    }
    return out;
}

ScanOutcome scan_parallel(std::uint64_t count, const CheckKernel& kernel, int threads) {
#ifdef _OPENMP
    ScanOutcome out;
    out.cases = count;
    std::atomic<std::uint64_t> first_fail{count};
    if (threads <= 0) threads = omp_get_max_threads();
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (long long idx = 0; idx < n; ++idx) {
        const std::uint64_t u = static_cast<std::uint64_t>(idx);
        if (u >= first_fail.load(std::memory_order_relaxed)) continue;
        if (!kernel(u).empty()) {
            std::uint64_t seen = first_fail.load(std::memory_order_relaxed);
            while (u < seen &&
                   !first_fail.compare_exchange_weak(seen, u, std::memory_order_relaxed)) {
            }
        }
    }
    if (first_fail.load() < count) {
        out.passed = false;
        out.counterexample = kernel(first_fail.load());
    }
    return out;
#else
    (void)threads;
    return scan_serial(count, kernel);
#endif
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "coassoc", "leibniz",    "cocycle",  "equiv",    "grading",
        "termcount", "nilpotency", "antipode", "morphism", "foissy"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    const DeltaFn delta = pick_delta(opts);
    SuitePlan plan;
    if (name == "coassoc") plan = plan_coassoc(opts, delta);
    else if (name == "leibniz") plan = plan_leibniz(opts, delta);
    else if (name == "cocycle") plan = plan_cocycle(opts, delta);
    else if (name == "equiv") plan = plan_equiv(opts, delta);
    else if (name == "grading") plan = plan_grading(opts, delta);
    else if (name == "termcount") plan = plan_termcount(opts, delta);
    else if (name == "nilpotency") plan = plan_nilpotency(opts);
    else if (name == "antipode") plan = plan_antipode(opts);
    else if (name == "morphism") plan = plan_morphism(opts);
    else if (name == "foissy") plan = plan_foissy(opts);
    else throw std::invalid_argument("unknown suite '" + name + "'");

    const auto start = std::chrono::steady_clock::now();
    const ScanOutcome scan = (opts.threads == 1)
                                 ? scan_serial(plan.count, plan.kernel)
                                 : scan_parallel(plan.count, plan.kernel, opts.threads);
    const auto stop = std::chrono::steady_clock::now();

    SuiteResult out;
    out.name = name;
    out.cases = scan.cases;
    out.passed = scan.passed;
    out.counterexample = scan.counterexample;
    out.seconds = std::chrono::duration<double>(stop - start).count();
    return out;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opts) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const std::string& s : suite_names()) out.push_back(run_suite(s, opts));
    } else {
        out.push_back(run_suite(name, opts));
    }
    return out;
}

}  // namespace foresthopf
