#pragma once

#include <cstdint>
#include <vector>

#include "surfbasis/embedding.hpp"

namespace surfbasis {

/// Builds an embedding from polygons glued along their sides. Each face is a
/// closed walk of darts over `edges`; every edge must be walked exactly twice
/// in total and the corners at each vertex must close into a single cycle.
/// Rotations and signature bits are derived from the gluing (any `sig` in
/// `edges` is ignored). Faces listed in `boundary` become boundary faces.
EmbeddingDescription glue_polygons(std::size_t vertex_count, std::vector<EdgeRecord> edges,
                                   const std::vector<std::vector<DartId>>& faces,
                                   const std::vector<std::size_t>& boundary = {});

/// As glue_polygons, for simple graphs: faces are vertex cycles and edges are
/// created on first use (unit weight, labelled by first appearance).
EmbeddingDescription glue_vertex_polygons(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& faces,
                                          const std::vector<std::size_t>& boundary = {});

// Fixed test instances.
EmbeddingDescription theta_instance();
EmbeddingDescription torus1_instance();
EmbeddingDescription k4_sphere_instance();
EmbeddingDescription projective_loop_instance();

/// N x N grid on the torus, unit weights, no boundary: n = N², m = 2N², N² faces.
EmbeddingDescription torus_grid(std::size_t n);
/// N x N grid on the Klein bottle (one pair of sides glued with a flip).
EmbeddingDescription klein_grid(std::size_t n);
/// N x N square with antipodal boundary points identified (projective plane), N >= 3.
EmbeddingDescription projective_grid(std::size_t n);
/// Two N x N torus grids glued along a removed square (genus 2), N >= 3.
EmbeddingDescription double_torus_grid(std::size_t n);

/// Random connected multigraph (loops and parallel edges allowed) with `m`
/// edges and shuffled rotations. Weights are integers in [1, 9]. With
/// `orientable` false the signature bits are random too.
EmbeddingDescription random_rotation(std::size_t n, std::size_t m, std::uint64_t seed, bool orientable = true);

/// Adds `count` loops and parallel edges placed so that each one closes off
/// a face of degree 1 or 2.
EmbeddingDescription inject_degenerate_faces(EmbeddingDescription desc, std::size_t count, std::uint64_t seed);

/// Replaces every weight by a random integer in [lo, hi].
EmbeddingDescription randomize_weights(EmbeddingDescription desc, std::uint64_t seed, int lo = 1, int hi = 9);

/// Marks the face with the largest index in tracing order as a boundary.
EmbeddingDescription with_punctured_last_face(const EmbeddingDescription& desc);

}  // namespace surfbasis
