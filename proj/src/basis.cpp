#include "surfbasis/basis.hpp"

namespace surfbasis {

EmbeddedGraph puncture_if_closed(const EmbeddedGraph& g) {
  // An edgeless graph has no corner to mark; its cycle space is empty anyway.
  if (g.num_boundary() > 0 || g.m() == 0) return g;
  return puncture(g, static_cast<FaceId>(g.num_faces() - 1));
}

Weight cycle_weight(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  Weight w = 0;
  for (EdgeId e : edges) w += g.weight(e);
  return w;
}

}  // namespace surfbasis
