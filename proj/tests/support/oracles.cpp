#include "support/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace nervecheck::testing {

using boost::multiprecision::cpp_int;

int rational_rank(const IntMatrix& a) {
  std::vector<std::vector<cpp_int>> m(a.rows, std::vector<cpp_int>(a.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m[i][j] = a.at(i, j);

  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < a.cols && rank < a.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < a.rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < a.rows; ++i) {
      for (int j = col + 1; j < a.cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

int determinant_sign_box(const IntMatrix& a) {
  if (a.rows != a.cols) throw Error(Errc::NonSquare, "determinant");
  const int n = a.rows;
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);

  int sign = 1;
  cpp_int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  const cpp_int det = sign * m[n - 1][n - 1];
  if (det < -2) return -2;
  if (det > 2) return 2;
  return static_cast<int>(det);
}

long long reduced_euler(const LabelledComplex& k) {
  long long chi = -1;
  const auto counts = k.simplex_counts_per_dim();
  for (std::size_t d = 0; d < counts.size(); ++d)
    chi += (d % 2 == 0 ? 1LL : -1LL) * counts[d];
  return chi;
}

bool has_induced_four_cycle(const CoxeterMatrix& m) {
  const int n = m.rank();
  auto edge = [&](int i, int j) { return m.label(i, j) == Label::finite(2); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // Three ways to pick the two diagonals of {a,b,c,d}.
          const int quad[3][4] = {
              {a, b, c, d},  // diagonals (a,c), (b,d); cycle a-b-c-d
              {a, c, b, d},  // diagonals (a,b), (c,d); cycle a-c-b-d
              {a, b, d, c},  // diagonals (a,d), (b,c); cycle a-b-d-c
          };
          for (const auto& q : quad) {
            if (edge(q[0], q[1]) && edge(q[1], q[2]) && edge(q[2], q[3]) &&
                edge(q[3], q[0]) && !edge(q[0], q[2]) && !edge(q[1], q[3]))
              return true;
          }
        }
  return false;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
  return names;
}

CoxeterMatrix uniform_matrix(int n, Label label) {
  std::vector<std::vector<Label>> raw(n, std::vector<Label>(n, label));
  for (int i = 0; i < n; ++i) raw[i][i] = Label::finite(1);
  return validate_matrix(raw);
}

CoxeterMatrix racg_matrix(int n,
                          const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<Label>> raw(n, std::vector<Label>(n, Label::inf()));
  for (int i = 0; i < n; ++i) raw[i][i] = Label::finite(1);
  for (auto [u, v] : edges) raw[u][v] = raw[v][u] = Label::finite(2);
  return validate_matrix(raw);
}

CoxeterMatrix triangle_matrix(Label p, Label q, Label r) {
  return validate_matrix({{Label::finite(1), p, q},
                          {p, Label::finite(1), r},
                          {q, r, Label::finite(1)}});
}

CoxeterMatrix infinite_dihedral() {
  return validate_matrix({{Label::finite(1), Label::inf()},
                          {Label::inf(), Label::finite(1)}});
}

std::vector<std::pair<int, int>> cycle_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return edges;
}

std::vector<std::pair<int, int>> complete_graph_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return edges;
}

std::vector<std::pair<int, int>> petersen_edges() {
  // Generalized Petersen graph GP(5,2): outer 0..4, inner 5..9.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return edges;
}

std::vector<std::pair<int, int>> dodecahedron_edges() {
  // Generalized Petersen graph GP(10,2): outer 0..9, inner 10..19.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return edges;
}

namespace {

// North 0, upper ring 1..5, lower ring 6..10, south 11.
std::vector<std::array<int, 3>> icosahedron_faces() {
  std::vector<std::array<int, 3>> faces;
  auto u = [](int i) { return 1 + (i % 5 + 5) % 5; };
  auto l = [](int i) { return 6 + (i % 5 + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, u(i), u(i + 1)});
    faces.push_back({u(i), u(i + 1), l(i)});
    faces.push_back({l(i), l(i + 1), u(i + 1)});
    faces.push_back({11, l(i), l(i + 1)});
  }
  return faces;
}

}  // namespace

std::vector<std::pair<int, int>> icosahedron_edges() {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : icosahedron_faces()) {
    edges.insert({std::min(f[0], f[1]), std::max(f[0], f[1])});
    edges.insert({std::min(f[1], f[2]), std::max(f[1], f[2])});
    edges.insert({std::min(f[0], f[2]), std::max(f[0], f[2])});
  }
  return {edges.begin(), edges.end()};
}

LabelledComplex graph_complex(int n,
                              const std::vector<std::pair<int, int>>& edges,
                              int label) {
  const auto names = default_names(n);
  std::vector<std::vector<std::string>> tops;
  std::map<std::pair<std::string, std::string>, int> labels;
  for (auto [u, v] : edges) {
    tops.push_back({names[u], names[v]});
    labels[{names[u], names[v]}] = label;
  }
  return LabelledComplex::closure_of(names, tops, labels);
}

LabelledComplex cycle_complex(int n, int label) {
  return graph_complex(n, cycle_edges(n), label);
}

namespace {

LabelledComplex complex_from_faces(int n,
                                   const std::vector<std::array<int, 3>>& faces,
                                   int label = 2) {
  const auto names = default_names(n);
  std::vector<std::vector<std::string>> tops;
  std::map<std::pair<std::string, std::string>, int> labels;
  for (const auto& f : faces) {
    tops.push_back({names[f[0]], names[f[1]], names[f[2]]});
    labels[{names[f[0]], names[f[1]]}] = label;
    labels[{names[f[1]], names[f[2]]}] = label;
    labels[{names[f[0]], names[f[2]]}] = label;
  }
  return LabelledComplex::closure_of(names, tops, labels);
}

}  // namespace

LabelledComplex tetrahedron_boundary() {
  return complex_from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

LabelledComplex octahedron_boundary() {
  // 0/1, 2/3, 4/5 are the three antipodal pairs.
  std::vector<std::array<int, 3>> faces;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) faces.push_back({x, y, z});
  return complex_from_faces(6, faces);
}

LabelledComplex icosahedron_boundary() {
  return complex_from_faces(12, icosahedron_faces());
}

LabelledComplex projective_plane() {
  return complex_from_faces(6, {{0, 1, 2},
                                {0, 2, 3},
                                {0, 3, 4},
                                {0, 4, 5},
                                {0, 5, 1},
                                {1, 2, 4},
                                {2, 3, 5},
                                {3, 4, 1},
                                {4, 5, 2},
                                {5, 1, 3}});
}

LabelledComplex random_complex(std::mt19937_64& rng, int max_vertices,
                               bool allow_dim3) {
  const int n = 1 + static_cast<int>(rng() % max_vertices);
  const auto names = default_names(n);

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::string>> tops;
  std::map<std::pair<std::string, std::string>, int> labels;
  const int label_pool[3] = {2, 3, 5};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 100 < 45) {
        adj[i][j] = adj[j][i] = true;
        tops.push_back({names[i], names[j]});
        labels[{names[i], names[j]}] =
            label_pool[rng() % 3];
      }

  std::set<std::array<int, 3>> filled;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (adj[i][j] && adj[j][k] && adj[i][k] && rng() % 100 < 50) {
          filled.insert({i, j, k});
          tops.push_back({names[i], names[j], names[k]});
        }
  if (allow_dim3)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l)
            if (filled.count({i, j, k}) && filled.count({i, j, l}) &&
                filled.count({i, k, l}) && filled.count({j, k, l}) &&
                rng() % 100 < 40)
              tops.push_back({names[i], names[j], names[k], names[l]});

  return LabelledComplex::closure_of(names, tops, labels);
}

}  // namespace nervecheck::testing
