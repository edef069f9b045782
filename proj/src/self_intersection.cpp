#include "slw/surfaces.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "surface_detail.hpp"

namespace slw {

  namespace {
    struct Ribbon {
      std::vector<int> pos;
      int              size;

      explicit Ribbon(std::vector<Letter> const& order) : pos(order.size()), size(static_cast<int>(order.size())) {
        for (std::size_t i = 0; i < order.size(); ++i) {
          pos[order[i].code] = static_cast<int>(i);
        }
      }
      int dist(Letter from, Letter to) const {
        return (pos[to.code] - pos[from.code] + size) % size;
      }
      // Going around from a, b is met before c.
      bool before(Letter a, Letter b, Letter c) const { return dist(a, b) < dist(a, c); }
      bool interleaved(Letter p1, Letter q1, Letter p2, Letter q2) const {
        return before(p1, p2, q1) != before(p1, q2, q1);
      }
    };

    // Linked pairs of strands of a cyclic (or, for prefixes, linear) word.
    // A strand at vertex i enters through w(i-1)^-1 and leaves through w(i).
    // The second strand runs forward (same) or backward (reversed). When
    // `cyclic` is false only configurations inside the prefix are counted and
    // `only_at` restricts to those whose last letter index is only_at.
    template <typename Get>
    long linked_pairs(Ribbon const& rb, long n, Get const& w, bool cyclic, long only_at) {
      auto at = [&](long i) { return w(cyclic ? ((i % n) + n) % n : i); };
      auto ok = [&](long i) { return cyclic || (i >= 0 && i < n); };
      long count = 0;
      for (long i = 0; i < n; ++i) {
        if (!ok(i - 1)) {
          continue;
        }
        Letter p1 = at(i - 1).inv();
        for (int reversed = 0; reversed < 2; ++reversed) {
          for (long j = 0; j < n; ++j) {
            if (!reversed && j == i) {
              continue;
            }
            long   bj = reversed ? j : j - 1;
            if (!ok(bj)) {
              continue;
            }
            Letter p2 = reversed ? at(j) : at(j - 1).inv();
            if (p1 == p2) {
              continue;
            }
            auto b_index = [&](long s) { return reversed ? j - 1 - s : j + s; };
            auto b_at    = [&](long s) { return reversed ? at(b_index(s)).inv() : at(b_index(s)); };
            long m        = 0;
            bool complete = true;
            while (true) {
              if (!ok(i + m) || !ok(b_index(m))) {
                complete = false;
                break;
              }
              if (m >= n || at(i + m) != b_at(m)) {
                break;
              }
              ++m;
            }
            if (!complete || m >= n) {
              continue;
            }
            if (!cyclic) {
              long last = std::max(i + m, reversed ? j : j + m);
              if (last != only_at) {
                continue;
              }
            }
            Letter q1 = at(i + m), q2 = b_at(m);
            bool   linked;
            if (m == 0) {
              if (reversed || p1 == q2 || p2 == q1) {
                continue;
              }
              linked = rb.interleaved(p1, q1, p2, q2);
            } else {
              Letter s  = at(i);
              Letter s2 = at(i + m - 1).inv();
              linked    = rb.before(s, p1, p2) == rb.before(s2, q1, q2);
            }
            count += linked ? 1 : 0;
          }
        }
      }
      return count;
    }

    struct Enumerator {
      SurfacePresentation const& s;
      int                        k;
      std::size_t                max_len;
      Ribbon                     rb;
      std::uint32_t              letters;
      std::vector<Word>          rots;
      std::size_t                half = 0;

      Enumerator(SurfacePresentation const& s_, int k_, std::size_t L)
          : s(s_), k(k_), max_len(L), rb(s_.ribbon_order),
            letters(static_cast<std::uint32_t>(2 * s_.alphabet.size())) {
        if (s.closed()) {
          Word r = s.relators.at(0);
          for (Word const& q : {r, r.inverse()}) {
            for (std::size_t i = 0; i < q.size(); ++i) {
              rots.push_back(q.rotated(i));
            }
          }
          half = static_cast<std::size_t>(2 * s.genus);
        }
      }

      // Some suffix of the prefix is more than half a relator.
      bool relator_suffix(std::vector<Letter> const& v) const {
        if (v.size() <= half) {
          return false;
        }
        for (auto const& r : rots) {
          std::size_t need = half + 1;
          if (std::equal(v.end() - static_cast<std::ptrdiff_t>(need), v.end(), r.begin())) {
            return true;
          }
        }
        return false;
      }

      long new_linked(std::vector<Letter> const& v) const {
        auto get = [&](long i) { return v[static_cast<std::size_t>(i)]; };
        long n   = static_cast<long>(v.size());
        return linked_pairs(rb, n, get, false, n - 1);
      }

      void leaf(std::vector<Letter> const& v, std::vector<CurveClass>& out) const {
        if (v.front() == v.back().inv()) {
          return;
        }
        Word w(v);
        if (!(least_rotation(w) == w) || least_rotation(w.inverse()) < w) {
          return;
        }
        if (!s.closed()) {
          int si = self_intersection(w, s);
          if (si <= k) {
            out.push_back({w, si});
          }
          return;
        }
        if (find_if_cyclic_relator(w)) {
          return;
        }
        auto c = detail::closed_class(w, s);
        if (c.orbit.front().size() < w.size()) {
          return;
        }
        if (c.si <= k) {
          out.push_back({c.canonical, c.si});
        }
      }

      bool find_if_cyclic_relator(Word const& w) const {
        std::size_t n = w.size();
        for (std::size_t p = 0; p < n; ++p) {
          for (auto const& r : rots) {
            std::size_t len = 0, limit = std::min(n, r.size());
            while (len < limit && w[(p + len) % n] == r[len]) {
              ++len;
            }
            if (len > half) {
              return true;
            }
          }
        }
        return false;
      }

      // Extends v by one letter if the extension survives pruning.
      bool admissible(std::vector<Letter>& v, long& lc) const {
        if (v.size() > 1 && v.back() < v.front()) {
          return false;
        }
        if (v.size() > 1 && v[v.size() - 2] == v.back().inv()) {
          return false;
        }
        if (s.closed() && relator_suffix(v)) {
          return false;
        }
        lc += new_linked(v);
        return lc <= 2L * k;
      }

      void dfs(std::vector<Letter>& v, long lc, std::vector<CurveClass>& out) const {
        leaf(v, out);
        if (v.size() >= max_len) {
          return;
        }
        for (std::uint32_t c = 0; c < letters; ++c) {
          v.push_back(Letter{c});
          long next = lc;
          if (admissible(v, next)) {
            dfs(v, next, out);
          }
          v.pop_back();
        }
      }

      struct Task {
        std::vector<Letter> prefix;
        long                lc;
      };

      void seed(std::vector<Letter>& v, long lc, std::size_t depth, std::vector<Task>& tasks,
                std::vector<CurveClass>& out) const {
        if (v.size() == depth || v.size() >= max_len) {
          tasks.push_back({v, lc});
          return;
        }
        if (!v.empty()) {
          leaf(v, out);
        }
        for (std::uint32_t c = 0; c < letters; ++c) {
          v.push_back(Letter{c});
          long next = lc;
          if (admissible(v, next)) {
            seed(v, next, depth, tasks, out);
          }
          v.pop_back();
        }
      }
    };
  }  // namespace

  int ribbon_self_intersection(const Word& c, const std::vector<Letter>& ribbon_order,
                               std::size_t rank) {
    if (ribbon_order.size() != 2 * rank) {
      throw input_error("ribbon order does not match the alphabet");
    }
    Word core = cyclic_reduction(c);
    if (core.empty()) {
      throw domain_error("self-intersection of a trivial class");
    }
    Ribbon rb(ribbon_order);
    auto   get   = [&](long i) { return core[static_cast<std::size_t>(i)]; };
    long   count = linked_pairs(rb, static_cast<long>(core.size()), get, true, 0);
    return static_cast<int>(count / 2);
  }

  std::vector<CurveClass> enumerate_k_simple(const SurfacePresentation& s, int k, int max_len,
                                             unsigned jobs) {
    if (max_len < 1 || k < 0) {
      throw input_error("enumerate_k_simple: need k >= 0 and max_len >= 1");
    }
    Enumerator              e(s, k, static_cast<std::size_t>(max_len));
    std::vector<CurveClass> out;
    std::vector<Enumerator::Task> tasks;
    std::vector<Letter>     v;
    e.seed(v, 0, 3, tasks, out);

    if (jobs == 0) {
      jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    std::atomic<std::size_t> next{0};
    std::mutex               mu;
    auto                     worker = [&] {
      std::vector<CurveClass> local;
      for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
        auto prefix = tasks[t].prefix;
        e.dfs(prefix, tasks[t].lc, local);
      }
      std::lock_guard lock(mu);
      out.insert(out.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    std::sort(out.begin(), out.end(), [](CurveClass const& a, CurveClass const& b) {
      return shortlex_less(a.word, b.word);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](CurveClass const& a, CurveClass const& b) { return a.word == b.word; }),
              out.end());
    return out;
  }

}  // namespace slw
