#include "ttone/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "ttone/error.hpp"
#include "ttone/generators.hpp"

namespace ttone {

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kMaxDomainLabels = 8192;

struct Near {
    Vertex vertex;
    std::uint32_t dist;
};

class Solver {
public:
    Solver(const Graph& g, unsigned t, unsigned k, const SearchOptions& options)
        : g_(g), t_(t), k_(k), symmetry_(options.symmetry_breaking), n_(g.order()) {
        if (options.timeout)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options.timeout);
        std::vector<Color> pool(k);
        for (unsigned c = 0; c < k; ++c) pool[c] = c + 1;
        for_each_subset(pool, t, [&](const Label& l) {
            std::uint64_t mask = 0;
            for (Color c : l.colors()) mask |= std::uint64_t{1} << (c - 1);
            labels_.push_back(mask);
            if (labels_.size() > kMaxDomainLabels)
                throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kMaxDomainLabels) + " labels");
            return true;
        });
        words_ = (labels_.size() + 63) / 64;

        // conflict_[(d-1) * L + i] marks labels sharing at least d colors with label i.
        const std::size_t L = labels_.size();
        conflict_.assign(static_cast<std::size_t>(t) * L * words_, 0);
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; j < L; ++j) {
                const auto s = static_cast<unsigned>(std::popcount(labels_[i] & labels_[j]));
                for (unsigned d = 1; d <= std::min(s, t); ++d)
                    conflict_[((d - 1) * L + i) * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
            }

        BfsScratch scratch(n_);
        near_.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            for (auto [u, d] : scratch.ball(g, v, t))
                if (d > 0) near_[v].push_back({u, d});

        assigned_.assign(n_, -1);
        pressure_.assign(n_, 0);
    }

    SearchResult run() {
        const auto start = Clock::now();
        SearchResult result;
        std::vector<std::uint64_t> domains(n_ * words_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (std::size_t j = 0; j < labels_.size(); ++j)
                domains[v * words_ + j / 64] |= std::uint64_t{1} << (j % 64);

        if (k_ >= t_ && search(domains, 0, 0)) {
            result.status = SearchStatus::Found;
            PartialToneColoring c({t_, k_}, n_);
            for (Vertex v = 0; v < n_; ++v) {
                Label l;
                auto mask = labels_[static_cast<std::size_t>(assigned_[v])];
                while (mask) {
                    l.insert(static_cast<Color>(std::countr_zero(mask) + 1));
                    mask &= mask - 1;
                }
                c.assign(v, l);
            }
            result.coloring = std::move(c);
        } else {
            result.status = timed_out_ ? SearchStatus::Timeout : SearchStatus::Absent;
        }
        stats_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        result.stats = stats_;
        return result;
    }

private:
    std::size_t domain_size(const std::vector<std::uint64_t>& domains, Vertex v) const {
        std::size_t s = 0;
        for (std::size_t w = 0; w < words_; ++w) s += static_cast<std::size_t>(std::popcount(domains[v * words_ + w]));
        return s;
    }

    // Most colored vertices within distance t, then smallest domain, then lowest id.
    std::optional<Vertex> pick_vertex(const std::vector<std::uint64_t>& domains) const {
        std::optional<Vertex> best;
        std::size_t best_pressure = 0, best_size = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (assigned_[v] >= 0) continue;
            const auto p = pressure_[v];
            if (best && p < best_pressure) continue;
            const auto s = domain_size(domains, v);
            if (!best || p > best_pressure || s < best_size) {
                best = v;
                best_pressure = p;
                best_size = s;
            }
        }
        return best;
    }

    bool out_of_time() {
        if (timed_out_) return true;
        if (deadline_ && (stats_.nodes & 1023) == 0 && Clock::now() > *deadline_) timed_out_ = true;
        return timed_out_;
    }

    // `used` is the number of colors introduced so far (colors 1..used).
    bool search(const std::vector<std::uint64_t>& domains, std::size_t depth, unsigned used) {
        ++stats_.nodes;
        if (out_of_time()) return false;
        auto pick = pick_vertex(domains);
        if (!pick) return true;
        const Vertex v = *pick;
        const std::size_t L = labels_.size();
        const std::uint64_t introduced = used >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;

        std::vector<std::uint64_t> next(domains.size());
        for (std::size_t w = 0; w < words_; ++w) {
            auto bits = domains[v * words_ + w];
            while (bits) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const auto mask = labels_[i];
                const auto fresh = mask & ~introduced;
                const auto j = static_cast<unsigned>(std::popcount(fresh));
                // New colors must be exactly used+1 .. used+j.
                const bool canonical =
                    used >= 64 || j >= 64 || fresh == (((std::uint64_t{1} << j) - 1) << used);
                if (symmetry_ && !canonical) {
                    ++stats_.symmetry_prunes;
                    continue;
                }
                next = domains;
                bool wiped = false;
                for (auto [u, d] : near_[v]) {
                    if (assigned_[u] >= 0) continue;
                    const auto* row = &conflict_[((d - 1) * L + i) * words_];
                    std::uint64_t any = 0;
                    for (std::size_t x = 0; x < words_; ++x) {
                        next[u * words_ + x] &= ~row[x];
                        any |= next[u * words_ + x];
                    }
                    if (!any) {
                        wiped = true;
                        break;
                    }
                }
                if (wiped) {
                    ++stats_.forbidden_prunes;
                    continue;
                }
                assigned_[v] = static_cast<int>(i);
                for (auto [u, d] : near_[v]) ++pressure_[u];
                const unsigned top = static_cast<unsigned>(64 - std::countl_zero(mask));
                if (search(next, depth + 1, std::max(used, top))) return true;
                for (auto [u, d] : near_[v]) --pressure_[u];
                assigned_[v] = -1;
                if (timed_out_) return false;
            }
        }
        return false;
    }

    const Graph& g_;
    unsigned t_, k_;
    bool symmetry_;
    std::size_t n_;
    std::optional<Clock::time_point> deadline_;
    bool timed_out_ = false;
    std::vector<std::uint64_t> labels_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> conflict_;
    std::vector<std::vector<Near>> near_;
    std::vector<int> assigned_;
    std::vector<std::size_t> pressure_;
    SearchStats stats_;
};

}  // namespace

SearchResult find_coloring(const Graph& g, unsigned t, unsigned k, const SearchOptions& options) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    if (k > 64) throw Error(ErrorKind::TooLarge, "exact solver supports k <= 64");
    if (k < t) return {};
    return Solver(g, t, k, options).run();
}

TauResult exact_tau(const Graph& g, unsigned t, unsigned kmax, const SearchOptions& options) {
    TauResult out;
    for (unsigned k = t; k <= kmax; ++k) {
        auto r = find_coloring(g, t, k, options);
        out.stats += r.stats;
        if (r.status == SearchStatus::Timeout) {
            out.status = TauStatus::Timeout;
            out.value = k;
            return out;
        }
        if (r.status == SearchStatus::Found) {
            out.status = TauStatus::Exact;
            out.value = k;
            out.witness = std::move(r.coloring);
            return out;
        }
    }
    out.status = TauStatus::AboveCap;
    return out;
}

bool has_complementary_pair(const LabelFamily& f) {
    const std::set<Label> members(f.begin(), f.end());
    for (const auto& first : f)
        for (const auto& second : f) {
            if (!(first < second) || !first.disjoint(second)) continue;
            const auto a = first.colors(), b = second.colors();
            if (a.size() != 2 || b.size() != 2) continue;
            // {a0 a1, b0 b1} plus one of the two cross matchings.
            if (members.contains(Label{a[0], b[0]}) && members.contains(Label{a[1], b[1]})) return true;
            if (members.contains(Label{a[0], b[1]}) && members.contains(Label{a[1], b[0]})) return true;
        }
    return false;
}

bool has_disjoint_triple(const LabelFamily& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (!f[i].disjoint(f[j])) continue;
            for (std::size_t l = j + 1; l < f.size(); ++l)
                if (f[l].disjoint(f[i]) && f[l].disjoint(f[j])) return true;
        }
    return false;
}

SevenLabelCheck check_seven_label_claim() {
    LabelFamily all;
    for (Color a = 1; a <= 6; ++a)
        for (Color b = a + 1; b <= 6; ++b) all.push_back(Label{a, b});
    SevenLabelCheck out;
    std::vector<std::size_t> idx{0, 1, 2, 3, 4, 5, 6};
    const std::size_t m = all.size(), r = idx.size();
    while (true) {
        LabelFamily family;
        for (auto i : idx) family.push_back(all[i]);
        ++out.families_checked;
        if (!has_complementary_pair(family) && !has_disjoint_triple(family))
            out.counterexamples.push_back(std::move(family));
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

HeawoodCertificate heawood_tau2(const SearchOptions& options) {
    const auto g = gen::heawood();
    HeawoodCertificate cert;
    cert.upper = gen::heawood_seven_coloring();
    cert.upper_violations = verify_coloring(g, cert.upper);
    cert.lower = find_coloring(g, 2, 6, options);
    // 0 signals that one of the two certificates did not hold.
    cert.value = cert.upper_violations.empty() && cert.lower.status == SearchStatus::Absent ? 7 : 0;
    return cert;
}

}  // namespace ttone
