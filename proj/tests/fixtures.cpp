#include "fixtures.hpp"

namespace adinkra::fixtures {

ColoredGraph k4() {
  GraphBuilder b(4, 3);
  b.add_edge(1, 4, 1).add_edge(2, 3, 1);
  b.add_edge(1, 3, 2).add_edge(2, 4, 2);
  b.add_edge(1, 2, 3).add_edge(3, 4, 3);
  return b.build();
}

ColoredGraph q3_twisted() {
  GraphBuilder b(8, 3);
  b.add_edge(1, 6, 1).add_edge(2, 5, 1).add_edge(3, 7, 1).add_edge(4, 8, 1);
  b.add_edge(1, 5, 2).add_edge(2, 6, 2).add_edge(3, 8, 2).add_edge(4, 7, 2);
  b.add_edge(1, 7, 3).add_edge(2, 8, 3).add_edge(3, 5, 3).add_edge(4, 6, 3);
  return b.build();
}

ColoredGraph k44_additive() {
  GraphBuilder b(8, 4);
  for (int i = 1; i <= 4; ++i) {
    b.set_label(i, "v" + std::to_string(i));
    b.set_label(4 + i, "w" + std::to_string(i));
    for (int j = 1; j <= 4; ++j) {
      b.add_edge(i, 4 + j, (i + j - 2) % 4 + 1);
    }
  }
  return b.build();
}

ColoredGraph bicolor_cycle(int m) {
  int n = 2 * m;
  GraphBuilder b(n, 2);
  for (int v = 1; v <= n; ++v) {
    int w = v % n + 1;
    b.add_edge(v, w, v % 2 == 1 ? 1 : 2);
  }
  return b.build();
}

namespace {

GraphBuilder adinkra_base() {
  GraphBuilder b(8, 4);
  b.set_parity({Parity::boson, Parity::boson, Parity::fermion, Parity::fermion,
                Parity::fermion, Parity::fermion, Parity::boson, Parity::boson});
  b.add_edge(1, 4, 1).add_edge(2, 5, 1, -1).add_edge(3, 7, 1).add_edge(6, 8, 1, -1);
  b.add_edge(1, 5, 2).add_edge(2, 4, 2).add_edge(3, 8, 2).add_edge(6, 7, 2);
  b.add_edge(1, 3, 3, -1).add_edge(2, 6, 3, -1).add_edge(4, 7, 3).add_edge(5, 8, 3);
  b.add_edge(1, 6, 4, -1).add_edge(2, 3, 4).add_edge(4, 8, 4, -1).add_edge(5, 7, 4);
  return b;
}

}  // namespace

ColoredGraph adinkra_242() {
  GraphBuilder b = adinkra_base();
  b.set_heights({0, 0, 1, 1, 1, 1, 2, 2});
  return b.build();
}

ColoredGraph adinkra_341() {
  GraphBuilder b = adinkra_base();
  b.set_heights({0, 0, 1, 1, 1, 1, 0, 2});
  return b.build();
}

ColoredGraph adinkra_44() {
  GraphBuilder b = adinkra_base();
  b.set_heights({0, 0, 1, 1, 1, 1, 0, 0});
  return b.build();
}

}  // namespace adinkra::fixtures
