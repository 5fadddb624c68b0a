#pragma once

#include <string>
#include <vector>

#include "gkz/int_matrix.hpp"

namespace gkz {

enum class LayerKind { Semigroup, SaturationGap, Cone, QuasiDegree, Sres, Dsres, DeltaCone };

struct Layer {
  LayerKind kind = LayerKind::Semigroup;
  size_t j = 0;  // column for QuasiDegree

  std::string name() const;
  // "semigroup", "saturation-gap", "cone", "qdeg(1)", "sres", "dsres", "delta-cone"
  static Layer parse(std::string_view text);
};

enum class DiagramFormat { Svg, Ascii };

struct DiagramSpec {
  IntVector lo, hi;  // inclusive box corners, length d <= 2
  std::vector<Layer> layers;
  DiagramFormat format = DiagramFormat::Ascii;
};

// Per-layer membership of every lattice point of the box; points enumerate x
// fastest, then y.
struct DiagramData {
  std::vector<IntVector> points;
  std::vector<std::vector<bool>> marks;  // marks[layer][point]
};

DiagramData classify_diagram(const IntMatrix& a, const DiagramSpec& spec);
std::string render_diagram(const IntMatrix& a, const DiagramSpec& spec);

}  // namespace gkz
