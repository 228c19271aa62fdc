#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ecci/canonical.hpp"
#include "ecci/enumerate.hpp"
#include "ecci/families.hpp"
#include "ecci/invariants.hpp"
#include "ecci/parameters.hpp"

namespace ecci {

/// Exact optimum of REE over one enumerated class, with every attaining tree.
/// Ties are part of the answer; an empty class is a result, not an error.
struct ExtremalResult {
    int n = 0;
    std::optional<ParamClass> cls;  // nullopt = all trees on n vertices
    bool maximize = true;
    std::string exclude_name;
    long class_size = 0;
    std::optional<Rational> value;
    std::map<CanonicalCode, Tree> witnesses;

    bool vacuous() const { return !value.has_value(); }
};

/// Canonical-code exclusion family. `cnd` removes every C_{n,d} split (for
/// odd d the spare pendants may sit on either central vertex; all such trees
/// share one REE, so the whole family must go). `tndpq` removes every
/// caterpillar with pendants only at v_1 and v_{d-1}.
struct Exclusion {
    std::string name;
    std::set<CanonicalCode> codes;
};

inline Exclusion make_exclusion(std::string_view name, int n, const ParamClass& cls) {
    if (cls.kind != ParamClass::Kind::Diameter)
        fail(Errc::InfeasibleParams, "named exclusions apply to diameter classes");
    int d = cls.a;
    Exclusion out{std::string(name), {}};
    if (name == "cnd") {
        int extra = n - d - 1;
        if (d % 2 == 0) {
            out.codes.insert(canonical_code(c_n_d(n, d)));
        } else {
            for (int a = 0; a <= extra; ++a) {
                std::vector<int> counts(d - 1, 0);
                counts[(d - 1) / 2 - 1] = a;
                counts[(d + 1) / 2 - 1] = extra - a;
                out.codes.insert(canonical_code(caterpillar(d, counts)));
            }
        }
    } else if (name == "tndpq") {
        int extra = n - d - 1;
        for (int p = 0; p <= extra; ++p) {
            std::vector<int> counts(d - 1, 0);
            counts[0] = p;
            counts[d - 2] = extra - p;
            out.codes.insert(canonical_code(caterpillar(d, counts)));
        }
    } else {
        fail(Errc::ParseError, "unknown exclusion '" + std::string(name) + "'");
    }
    return out;
}

inline int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Exhaustive extremal search over the filtered class. Partitioned across
/// workers by stream striding; per-worker results merge by value comparison
/// and witness-set union, so the outcome is independent of worker count and
/// consumption order.
inline ExtremalResult extremal_search(int n, const std::optional<ParamClass>& cls, bool maximize,
                                      const Exclusion* exclude = nullptr, int workers = 1,
                                      int max_n = kDefaultMaxN) {
    workers = resolve_workers(workers);
    struct Partial {
        long size = 0;
        std::optional<Rational> best;
        std::map<CanonicalCode, Tree> witnesses;
    };
    std::vector<Partial> parts(workers);

    auto run = [&](int wid) {
        Partial& part = parts[wid];
        FreeTreeStream stream(n, workers, wid, max_n);
        while (auto t = stream.next()) {
            if (cls && !cls->matches(*t)) continue;
            std::optional<CanonicalCode> code;
            if (exclude) {
                code = canonical_code(*t);
                if (exclude->codes.count(*code)) continue;
            }
            ++part.size;
            Rational v = ree(*t);
            bool better = !part.best || (maximize ? v > *part.best : v < *part.best);
            if (better) {
                part.best = v;
                part.witnesses.clear();
            }
            if (part.best && v == *part.best) {
                if (!code) code = canonical_code(*t);
                part.witnesses.emplace(std::move(*code), std::move(*t));
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    ExtremalResult out;
    out.n = n;
    out.cls = cls;
    out.maximize = maximize;
    if (exclude) out.exclude_name = exclude->name;
    for (auto& part : parts) {
        out.class_size += part.size;
        if (!part.best) continue;
        bool better = !out.value || (maximize ? *part.best > *out.value : *part.best < *out.value);
        if (better) {
            out.value = *part.best;
            out.witnesses.clear();
        }
        if (out.value && *part.best == *out.value)
            out.witnesses.merge(part.witnesses);
    }
    return out;
}

}  // namespace ecci
