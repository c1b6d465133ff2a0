#include "filterless/io.hpp"

#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "filterless/error.hpp"

namespace filterless {

namespace {

[[noreturn]] void fail(ErrorKind kind, int line, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int number(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::kParseError, line,
         "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  std::vector<Request> requests;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    auto tok = split(line);
    if (tok.empty() || tok[0] == "c") continue;

    auto vertex = [&](std::string_view token) {
      int v = number(token, line_no);
      if (v < 1 || v > n) {
        fail(ErrorKind::kInvalidVertex, line_no,
             "vertex " + std::string(token) + " outside 1.." +
                 std::to_string(n));
      }
      return v - 1;
    };

    if (tok[0] == "p") {
      if (n >= 0) fail(ErrorKind::kParseError, line_no, "second header");
      if (tok.size() != 4 || tok[1] != "tree") {
        fail(ErrorKind::kParseError, line_no, "expected 'p tree <n> <m>'");
      }
      n = number(tok[2], line_no);
      m = number(tok[3], line_no);
      if (n < 1 || m < 0) {
        fail(ErrorKind::kParseError, line_no, "bad header counts");
      }
    } else if (tok[0] == "e") {
      if (n < 0) fail(ErrorKind::kParseError, line_no, "edge before header");
      if (!requests.empty()) {
        fail(ErrorKind::kParseError, line_no, "edge after requests");
      }
      if (tok.size() != 3) fail(ErrorKind::kParseError, line_no, "'e <u> <v>'");
      if (static_cast<int>(edges.size()) == n - 1) {
        fail(ErrorKind::kCountMismatch, line_no,
             "more than " + std::to_string(n - 1) + " edges");
      }
      edges.emplace_back(vertex(tok[1]), vertex(tok[2]));
    } else if (tok[0] == "r") {
      if (n < 0) fail(ErrorKind::kParseError, line_no, "request before header");
      if (tok.size() != 3) fail(ErrorKind::kParseError, line_no, "'r <s> <t>'");
      if (static_cast<int>(requests.size()) == m) {
        fail(ErrorKind::kCountMismatch, line_no,
             "more than " + std::to_string(m) + " requests");
      }
      Vertex s = vertex(tok[1]);
      Vertex t = vertex(tok[2]);
      if (s == t) {
        fail(ErrorKind::kZeroLengthRequest, line_no,
             "request from " + std::string(tok[1]) + " to itself");
      }
      requests.push_back({s, t});
    } else {
      fail(ErrorKind::kParseError, line_no,
           "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw Error(ErrorKind::kParseError, "missing 'p tree' header");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw Error(ErrorKind::kCountMismatch,
                "expected " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  if (static_cast<int>(requests.size()) != m) {
    throw Error(ErrorKind::kCountMismatch,
                "expected " + std::to_string(m) + " requests, got " +
                    std::to_string(requests.size()));
  }
  return Instance(Tree::build(n, edges), std::move(requests));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p tree " << inst.num_vertices() << ' ' << inst.num_requests()
      << '\n';
  for (auto [u, v] : inst.tree().edges()) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  for (const Request& r : inst.requests()) {
    out << "r " << r.source + 1 << ' ' << r.target + 1 << '\n';
  }
  return out.str();
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kBadParams, what);
}

Instance star_kmn(int m, int n) {
  require(m >= 1 && n >= 1, "star_kmn needs m, n >= 1");
  std::vector<Edge> edges;
  std::vector<Request> requests;
  for (int leaf = 1; leaf <= m + n; ++leaf) edges.emplace_back(0, leaf);
  for (int leaf = 1; leaf <= m; ++leaf) requests.push_back({leaf, 0});
  for (int leaf = m + 1; leaf <= m + n; ++leaf) requests.push_back({0, leaf});
  return Instance(Tree::build(m + n + 1, edges), std::move(requests));
}

Instance c5kt(int t) {
  require(t >= 1, "c5kt needs t >= 1");
  const Vertex a = 0, b = 1, c = 2, d = 3;
  std::vector<Edge> edges{{a, b}, {b, c}, {b, d}};
  const Request base[5] = {{a, b}, {b, c}, {d, b}, {b, a}, {c, d}};
  std::vector<Request> requests;
  for (const Request& r : base) {
    for (int copy = 0; copy < t; ++copy) requests.push_back(r);
  }
  return Instance(Tree::build(4, edges), std::move(requests));
}

Instance fig1() {
  const Vertex x = 0, y = 1, z0 = 2, z1 = 3, t0 = 4, t1 = 5, t2 = 6, t3 = 7;
  std::vector<Edge> edges{{x, y},   {y, z0},  {y, z1}, {z0, t0},
                          {z0, t1}, {z1, t2}, {z1, t3}};
  std::vector<Request> requests{{x, z0},  {x, z1},  {t0, z0},
                                {t1, z0}, {t2, z1}, {t3, z1}};
  return Instance(Tree::build(8, edges), std::move(requests));
}

// Uniform labelled tree from a uniform parent (Pruefer) sequence, and
// uniform requests with distinct endpoints.
Instance random_instance(int n, int m, std::uint64_t seed) {
  require(n >= 2, "random needs n >= 2");
  require(m >= 1, "random needs at least one request");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& x : code) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::set<int> free_leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) free_leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (int x : code) {
    int leaf = *free_leaves.begin();
    free_leaves.erase(free_leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) free_leaves.insert(x);
  }
  int u = *free_leaves.begin();
  int v = *std::next(free_leaves.begin());
  edges.emplace_back(u, v);

  std::vector<Request> requests;
  std::uniform_int_distribution<int> other(0, n - 2);
  for (int i = 0; i < m; ++i) {
    int s = pick(rng);
    int t = other(rng);
    if (t >= s) ++t;
    requests.push_back({s, t});
  }
  return Instance(Tree::build(n, edges), std::move(requests));
}

}  // namespace

Instance generate(std::string_view kind, const GenParams& params,
                  std::uint64_t seed) {
  if (kind == "star_kmn") return star_kmn(params.m, params.n);
  if (kind == "c5kt") return c5kt(params.t);
  if (kind == "fig1") return fig1();
  if (kind == "random") return random_instance(params.n, params.m, seed);
  throw Error(ErrorKind::kBadParams,
              "unknown generator '" + std::string(kind) + "'");
}

}  // namespace filterless
