#pragma once

#include <array>
#include <optional>
#include <vector>

#include "covlab/hypergraph.hpp"

namespace covlab {

using Coordinates = std::array<int, 3>;

struct ProjectivePlane {
  int q = 0;
  // Points are vertices, lines are edges. Point i has homogeneous
  // coordinates points[i] (first nonzero entry 1); line j is the set of
  // points orthogonal to line_coordinates[j].
  Hypergraph incidence;
  std::vector<Coordinates> points;
  std::vector<Coordinates> line_coordinates;
};

// PG(2,q) for q in {2,3,4,5,7}; both incidence axioms are checked.
ProjectivePlane projective_plane(int q);

// Every r-subset of an n-set; r <= n <= 24 and at most 512 edges.
Hypergraph complete_subsets(int n, int r);

// Vertex (i,j) is i*cols + j; edge C(a,b) is row a union column b.
Hypergraph cross_grid(int rows, int cols);

// 4x4 grid, the edge of cell c is the six other cells in its row and column.
Hypergraph kummer();

// Translates of the quadratic residues {1,3,4,5,9} mod 11.
Hypergraph paley_biplane();

enum class ThreeHares {
  Base,      // three edges on 10 vertices sharing vertex 10
  Extended,  // base plus three edges: the 3-regular 6-edge example
  Chain,     // the 3-edge cycle (1..5),(4..8),(7,8,9,1,2) on 9 vertices
};
Hypergraph three_hares(ThreeHares variant);

Hypergraph tetrahedron();
Hypergraph fano_plane();
Hypergraph fano_complement();

// Lines of PG(2,q) meeting the conic {(1,s,s^2)} u {(0,0,1)}: (q+1)(q+2)/2 lines.
Hypergraph oval_lines(int q);

// The 5-uniform intersecting hypergraph on 21 vertices whose edges are the
// 12 lines of AG(2,3) (vertices 0..8, point (x,y) = 3x+y), each extended by
// one extra vertex per pair of parallel lines (vertices 9..20). Its dual is
// the pairwise balanced design with 9 blocks of size 4 and 12 of size 2.
Hypergraph ag23_dual();

// Searches for an injective point map sending every edge of h onto a line of
// the plane. Returns map[v] = plane point for each vertex of h.
std::optional<std::vector<int>> embed_in_plane(const Hypergraph& h, const ProjectivePlane& plane);

}  // namespace covlab
