#include "slw/surfaces.hpp"

#include "surface_detail.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace slw {

  namespace {
    std::vector<Letter> ribbon_from_boundary(std::vector<Word> const& boundary, std::size_t rank) {
      std::size_t              n2 = 2 * rank;
      std::vector<int>         succ(n2, -1);
      for (auto const& w : boundary) {
        if (w.empty()) {
          throw input_error("boundary word is trivial");
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
          Letter from = w[i].inv();
          Letter to   = w[(i + 1) % w.size()];
          if (from.code >= n2 || to.code >= n2) {
            throw input_error("boundary word uses a generator outside the alphabet");
          }
          if (succ[from.code] != -1) {
            throw input_error("boundary words use a signed letter twice");
          }
          succ[from.code] = static_cast<int>(to.code);
        }
      }
      std::vector<Letter> order;
      std::uint32_t       cur = 0;
      for (std::size_t i = 0; i < n2; ++i) {
        if (succ[cur] < 0) {
          throw input_error("boundary words miss a signed letter");
        }
        order.push_back(Letter{cur});
        cur = static_cast<std::uint32_t>(succ[cur]);
        if (cur == 0 && i + 1 < n2) {
          throw input_error("boundary words do not give a one-vertex ribbon graph");
        }
      }
      if (cur != 0) {
        throw input_error("boundary words do not give a one-vertex ribbon graph");
      }
      return order;
    }

    void require_closed(SurfacePresentation const& s) {
      if (!s.closed() || s.genus < 2 || s.relators.size() != 1) {
        throw domain_error("Dehn's algorithm needs a closed surface of genus at least 2");
      }
    }

    // Rotations of the relator and its inverse.
    std::vector<Word> relator_rotations(SurfacePresentation const& s) {
      std::vector<Word> out;
      for (Word const& r : {s.relators[0], s.relators[0].inverse()}) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          out.push_back(r.rotated(i));
        }
      }
      return out;
    }

    struct Match {
      std::size_t start = 0, length = 0, rotation = 0;
    };

    // Longest cyclic match of w against a relator rotation with length at
    // least `minimum`, scanning start positions in order.
    std::optional<Match> find_cyclic_match(Word const& w, std::vector<Word> const& rots,
                                           std::size_t minimum, bool cyclic) {
      std::size_t n = w.size();
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t r = 0; r < rots.size(); ++r) {
          if (rots[r][0] != w[p]) {
            continue;
          }
          std::size_t limit = std::min(rots[r].size(), cyclic ? n : n - p);
          std::size_t len   = 0;
          while (len < limit && w[(p + len) % n] == rots[r][len]) {
            ++len;
          }
          if (len >= minimum) {
            return Match{p, len, r};
          }
        }
      }
      return std::nullopt;
    }

    // Replace the matched piece of the cyclic word by the inverse of the
    // complementary piece of the relator, then cyclically reduce.
    Word substitute(Word const& w, Match const& m, std::vector<Word> const& rots) {
      Word rotated = w.rotated(m.start);
      Word rest    = rotated.subword(m.length, rotated.size() - m.length);
      Word r       = rots[m.rotation];
      Word piece   = r.subword(m.length, r.size() - m.length).inverse();
      return cyclic_reduction(piece * rest);
    }

    Word cyclic_dehn_once(Word w, std::vector<Word> const& rots, std::size_t half) {
      w = cyclic_reduction(w);
      while (auto m = find_cyclic_match(w, rots, half + 1, true)) {
        w = substitute(w, *m, rots);
      }
      return w;
    }

    std::vector<Word> orbit_of(Word const& w, SurfacePresentation const& s) {
      auto        rots  = relator_rotations(s);
      std::size_t half  = static_cast<std::size_t>(2 * s.genus);
      Word        start = cyclic_dehn_once(w, rots, half);
    restart:
      std::set<Word>   seen{least_rotation(start)};
      std::deque<Word> queue{start};
      while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        std::size_t n = cur.size();
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t r = 0; r < rots.size(); ++r) {
            if (rots[r][0] != cur[p] || n < half) {
              continue;
            }
            std::size_t len = 0;
            while (len < half && cur[(p + len) % n] == rots[r][len]) {
              ++len;
            }
            if (len < half) {
              continue;
            }
            Word next = substitute(cur, Match{p, half, r}, rots);
            if (next.size() < n || find_cyclic_match(next, rots, half + 1, true)) {
              start = cyclic_dehn_once(next, rots, half);
              goto restart;
            }
            Word key = least_rotation(next);
            if (seen.insert(key).second) {
              queue.push_back(key);
            }
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    int ribbon_si_with_powers(Word const& core, SurfacePresentation const& s) {
      auto [root, p] = primitive_root(core);
      int base       = ribbon_self_intersection(cyclic_reduction(root), s.ribbon_order,
                                                s.alphabet.size());
      return p * p * base + p - 1;
    }
  }  // namespace

  SurfacePresentation surface_from_boundary(int genus, Alphabet alphabet,
                                            std::vector<Word> boundary_words) {
    int b = static_cast<int>(boundary_words.size());
    if (genus < 0 || b < 1 || 2 - 2 * genus - b >= 0) {
      throw domain_error("surface type is not hyperbolic");
    }
    if (alphabet.size() != static_cast<std::size_t>(2 * genus + b - 1)) {
      throw input_error("alphabet rank does not match the surface type");
    }
    SurfacePresentation s;
    s.genus          = genus;
    s.boundary_count = b;
    s.ribbon_order   = ribbon_from_boundary(boundary_words, alphabet.size());
    s.alphabet       = std::move(alphabet);
    s.boundary_words = std::move(boundary_words);
    return s;
  }

  SurfacePresentation build_surface(int genus, int boundary_count) {
    if (genus < 0 || boundary_count < 0 || 2 - 2 * genus - boundary_count >= 0) {
      throw domain_error("surface type (" + std::to_string(genus) + "," +
                         std::to_string(boundary_count) + ") is not hyperbolic");
    }
    if (boundary_count == 0) {
      SurfacePresentation s;
      s.genus    = genus;
      s.alphabet = Alphabet::surface(static_cast<std::size_t>(genus));
      Word r;
      for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(genus); ++i) {
        r *= commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
      }
      s.relators     = {r};
      s.ribbon_order = ribbon_from_boundary({r}, s.alphabet.size());
      return s;
    }
    auto              rank = static_cast<std::uint32_t>(2 * genus + boundary_count - 1);
    auto              nb   = static_cast<std::uint32_t>(boundary_count - 1);
    std::vector<Word> boundary;
    Word              prod;
    for (std::uint32_t i = 0; i < nb; ++i) {
      boundary.push_back(Word::generator(i));
      prod *= Word::generator(i);
    }
    Word last;
    for (std::uint32_t i = nb; i < rank; i += 2) {
      last *= commutator(Word::generator(i), Word::generator(i + 1));
    }
    boundary.push_back(last * prod.inverse());
    return surface_from_boundary(genus, Alphabet::standard(rank), std::move(boundary));
  }

  Word dehn_reduce(const Word& w, const SurfacePresentation& s) {
    require_closed(s);
    auto        rots = relator_rotations(s);
    std::size_t half = static_cast<std::size_t>(2 * s.genus);
    Word        cur  = w;
    while (auto m = find_cyclic_match(cur, rots, half + 1, false)) {
      Word const& r = rots[m->rotation];
      cur           = cur.subword(0, m->start) *
            r.subword(m->length, r.size() - m->length).inverse() *
            cur.subword(m->start + m->length, cur.size() - m->start - m->length);
    }
    return cur;
  }

  bool is_trivial_in_surface(const Word& w, const SurfacePresentation& s) {
    if (!s.closed()) {
      return w.empty();
    }
    return dehn_reduce(w, s).empty();
  }

  Word cyclic_dehn_reduce(const Word& w, const SurfacePresentation& s) {
    require_closed(s);
    auto orbit = orbit_of(w, s);
    return orbit.front();
  }

  std::vector<Word> flip_orbit(const Word& w, const SurfacePresentation& s) {
    require_closed(s);
    return orbit_of(w, s);
  }

  namespace detail {
    ClosedClass closed_class(const Word& w, const SurfacePresentation& s) {
      ClosedClass c;
      c.orbit = flip_orbit(w, s);
      if (c.orbit.front().empty()) {
        throw domain_error("trivial curve class");
      }
      c.canonical = c.orbit.front();
      c.si        = -1;
      for (auto const& u : c.orbit) {
        c.canonical = std::min({c.canonical, u, least_rotation(u.inverse())});
        int v       = ribbon_si_with_powers(u, s);
        if (c.si < 0 || v < c.si) {
          c.si = v;
        }
      }
      return c;
    }
  }  // namespace detail

  Word canonical_class(const Word& w, const SurfacePresentation& s) {
    if (!s.closed()) {
      if (w.empty()) {
        throw domain_error("trivial curve class");
      }
      return cyclic_normal_form(w, true).representative;
    }
    return detail::closed_class(w, s).canonical;
  }

  int self_intersection(const Word& c, const SurfacePresentation& s) {
    if (!s.closed()) {
      Word core = cyclic_reduction(c);
      if (core.empty()) {
        throw domain_error("self-intersection of a trivial class");
      }
      if (core.max_generator_bound() > s.alphabet.size()) {
        throw input_error("word is not over the surface alphabet");
      }
      return ribbon_si_with_powers(core, s);
    }
    return detail::closed_class(c, s).si;
  }

}  // namespace slw
