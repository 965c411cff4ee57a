#include <json.hpp>

#include "immcensus/encodings.hpp"

namespace immcensus {

DiagramCode diagram_from_z(const ZCode& c) {
  const int n = c.n;
  const int g = z_genus(c);  // validates pi
  auto pi = c.pi.raw();
  DiagramCode d;
  d.n = n;
  // vertex a carries incoming edges 2a-1, 2a; each continues straight through
  // to pi of itself, and psi_pi reads the corners in the order in1,in2,out1,out2
  for (int a = 0; a < n; ++a) {
    d.vertices.push_back({2 * a + 1, 2 * a + 2, pi[2 * a] + 1, pi[2 * a + 1] + 1});
  }
  int e = 0;
  do {
    d.closure.push_back(e + 1);
    e = pi[e];
  } while (e != 0);
  d.one_component = d.closure.size() == static_cast<std::size_t>(2 * n);
  d.genus = g;
  d.virtual_crossings_lower_bound = g;
  return d;
}

ZCode z_from_diagram(const DiagramCode& d) {
  const int n = d.n;
  if (n < 1 || d.vertices.size() != static_cast<std::size_t>(n)) throw InvalidInput("diagram: vertex count must be n");
  std::vector<int> pi(static_cast<std::size_t>(2 * n), 0);
  for (const auto& v : d.vertices) {
    for (int k = 0; k < 2; ++k) {
      int in = v[k];
      if (in < 1 || in > 2 * n) throw InvalidInput("diagram: edge label out of range");
      pi[in - 1] = v[k + 2];
    }
  }
  ZCode z{n, Perm::from_one_line(pi)};
  if (!is_single_cycle(z.pi)) throw InvalidInput("diagram: curve has more than one component");
  return z;
}

std::string diagram_to_json(const DiagramCode& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["vertices"] = d.vertices;
  j["closure"] = d.closure;
  j["genus"] = d.genus;
  j["virtual_crossings_lower_bound"] = d.virtual_crossings_lower_bound;
  j["one_component"] = d.one_component;
  return j.dump();
}

DiagramCode diagram_from_json(const std::string& text) {
  DiagramCode d;
  try {
    auto j = nlohmann::json::parse(text);
    d.n = j.at("n").get<int>();
    d.vertices = j.at("vertices").get<std::vector<std::array<int, 4>>>();
    d.closure = j.at("closure").get<std::vector<int>>();
    d.genus = j.value("genus", 0);
    d.virtual_crossings_lower_bound = j.value("virtual_crossings_lower_bound", d.genus);
    d.one_component = j.value("one_component", true);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("diagram json: ") + e.what());
  }
  return d;
}

YCode convert_x_to_y(const XCode& c) {
  if (!x_classify(c)) throw InvalidInput("convert_x_to_y: not a one-component X code");
  const int n = c.n;
  const int m = 4 * n;
  auto tau = c.tau.raw();
  Perm sigma = x_sigma(n);
  Perm faces = compose(sigma, c.tau);
  auto f = faces.raw();
  std::vector<int> face_of(static_cast<std::size_t>(m), -1);
  int face_count = 0;
  for (int h = 0; h < m; ++h) {
    if (face_of[h] >= 0) continue;
    for (int k = h; face_of[k] < 0; k = f[k]) face_of[k] = face_count;
    ++face_count;
  }
  // 2-colour faces: the two sides of each edge {h, tau h} must differ
  std::vector<int> colour(static_cast<std::size_t>(face_count), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(face_count));
  for (int h = 0; h < m; ++h) adj[face_of[h]].push_back(face_of[tau[h]]);
  colour[face_of[0]] = 0;
  std::vector<int> queue{face_of[0]};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj[u]) {
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        queue.push_back(v);
      } else if (colour[v] == colour[u]) {
        throw NotBicolourable("faces do not admit a checkerboard colouring");
      }
    }
  }
  // a half-edge is an incoming end iff the face on its left (its own face) is white
  std::vector<int> label(static_cast<std::size_t>(m), -1);
  for (int v = 0; v < n; ++v) {
    int next = 2 * v;
    for (int k = 0; k < 4; ++k) {
      int h = 4 * v + k;
      if (colour[face_of[h]] == 0) label[h] = next++;
    }
    if (next != 2 * v + 2) throw std::logic_error("convert_x_to_y: vertex without two incoming ends");
  }
  Perm sig_inv = inverse(sigma);
  std::vector<std::uint8_t> ys(static_cast<std::size_t>(2 * n));
  for (int h = 0; h < m; ++h) {
    if (label[h] < 0) continue;
    int out = sig_inv.raw()[h];  // outgoing end counterclockwise next to h
    ys[label[h]] = static_cast<std::uint8_t>(label[tau[out]]);
  }
  return YCode{n, Perm::from_zero_based(std::move(ys))};
}

YCode convert_u_to_y(const UCode& c) { return YCode{c.n, c.sigma()}; }

ZCode convert_u_to_z(const UCode& c) {
  const int n = c.n;
  const int m = 2 * n;
  Perm s = c.sigma();
  auto sg = s.raw();
  // the curve runs along edges 0,1,...,2n-1; at vertex a it passes 2a -> 2a+1
  // and u -> u+1 where u is the odd member of {sigma(2a), sigma(2a+1)}
  std::vector<int> label(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < n; ++a) {
    int s0 = sg[2 * a];
    int in1, in2;
    if (s0 % 2 == 1) {
      in1 = 2 * a;
      in2 = s0;
    } else {
      in1 = sg[2 * a + 1];
      in2 = 2 * a;
    }
    label[in1] = 2 * a;
    label[in2] = 2 * a + 1;
  }
  std::vector<std::uint8_t> pi(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    if (label[e] < 0) throw std::logic_error("convert_u_to_z: edge without a head");
    pi[label[e]] = static_cast<std::uint8_t>(label[(e + 1) % m]);
  }
  return ZCode{n, Perm::from_zero_based(std::move(pi))};
}

ZCode convert_y_to_z(const YCode& c) { return convert_u_to_z(gauge_y_to_u(c)); }

}  // namespace immcensus
