#include "slw/words.hpp"

#include <map>
#include <set>

namespace slw {

  namespace {
    // Edge from -> to labelled by a positive target generator. sigma is a
    // source word with f(sigma) = p(from) * label * p(to)^-1 for some vertex
    // potentials p.
    struct Edge {
      std::size_t   from;
      std::size_t   to;
      std::uint32_t gen;
      Word          sigma;
      bool          alive = true;
    };

    struct HalfEdge {
      std::size_t edge;
      bool        forward;
    };

    struct Folder {
      std::vector<Edge>     edges;
      std::set<std::size_t> vertices;
      std::size_t           base = 0;

      Letter label(HalfEdge h) const { return Letter::make(edges[h.edge].gen, !h.forward); }
      std::size_t head(HalfEdge h) const {
        return h.forward ? edges[h.edge].to : edges[h.edge].from;
      }
      Word sigma(HalfEdge h) const {
        return h.forward ? edges[h.edge].sigma : edges[h.edge].sigma.inverse();
      }

      // First pair of half-edges at a common vertex with a common label.
      std::optional<std::pair<HalfEdge, HalfEdge>> find_fold() const {
        std::map<std::pair<std::size_t, std::uint32_t>, HalfEdge> seen;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (!edges[e].alive) {
            continue;
          }
          for (bool fwd : {true, false}) {
            HalfEdge    h{e, fwd};
            std::size_t tail = fwd ? edges[e].from : edges[e].to;
            auto [it, fresh] = seen.try_emplace({tail, label(h).code}, h);
            if (!fresh && it->second.edge != e) {
              return std::pair{it->second, h};
            }
          }
        }
        return std::nullopt;
      }

      // Identify u2 with u1, where delta satisfies f(delta) = p(u1) p(u2)^-1.
      void merge(std::size_t u1, std::size_t u2, Word const& delta) {
        Word delta_inv = delta.inverse();
        for (auto& e : edges) {
          if (!e.alive) {
            continue;
          }
          bool out = e.from == u2, in = e.to == u2;
          if (out && in) {
            e.sigma = delta * e.sigma * delta_inv;
          } else if (out) {
            e.sigma = delta * e.sigma;
          } else if (in) {
            e.sigma = e.sigma * delta_inv;
          }
          if (out) {
            e.from = u1;
          }
          if (in) {
            e.to = u1;
          }
        }
        vertices.erase(u2);
      }
    };
  }  // namespace

  StallingsResult stallings_analysis(const FreeHom& f) {
    StallingsResult result;
    result.injective = true;
    Folder      g;
    std::size_t next_vertex = 1;
    g.vertices.insert(0);
    for (std::uint32_t i = 0; i < f.source_rank(); ++i) {
      Word const& w = f.image(i);
      if (w.empty()) {
        if (result.injective) {
          result.injective    = false;
          result.fold_witness = std::pair{Word::generator(i), Word()};
        }
        continue;
      }
      std::size_t prev = g.base;
      for (std::size_t j = 0; j < w.size(); ++j) {
        bool        last = j + 1 == w.size();
        std::size_t next = last ? g.base : next_vertex++;
        g.vertices.insert(next);
        Word sigma = last ? Word::generator(i) : Word();
        if (w[j].inverse()) {
          g.edges.push_back({next, prev, w[j].gen(), sigma.inverse()});
        } else {
          g.edges.push_back({prev, next, w[j].gen(), sigma});
        }
        prev = next;
      }
    }

    while (auto fold = g.find_fold()) {
      auto [h1, h2]   = *fold;
      std::size_t u1  = g.head(h1), u2 = g.head(h2);
      Word        s1  = g.sigma(h1), s2 = g.sigma(h2);
      if (u1 == u2) {
        if (result.injective) {
          result.injective    = false;
          result.fold_witness = std::pair{s1, s2};
        }
        g.edges[h2.edge].alive = false;
        continue;
      }
      if (u2 == g.base) {
        std::swap(u1, u2);
        std::swap(s1, s2);
        std::swap(h1, h2);
      }
      g.edges[h2.edge].alive = false;
      g.merge(u1, u2, s1.inverse() * s2);
    }

    std::size_t alive = 0;
    for (auto const& e : g.edges) {
      alive += e.alive ? 1 : 0;
    }
    result.vertices   = g.vertices.size();
    result.edges      = alive;
    result.surjective = result.vertices == 1 && alive == f.target().size();
    return result;
  }

  std::optional<Word> kernel_witness(const FreeHom& f) {
    auto r = stallings_analysis(f);
    if (!r.fold_witness) {
      return std::nullopt;
    }
    return r.fold_witness->first * r.fold_witness->second.inverse();
  }

}  // namespace slw
