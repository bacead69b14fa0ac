#include "itergroup/bp_encode.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace itergroup {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedProgram, why);
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BranchingProgram::BranchingProgram(std::size_t variables, std::size_t start, std::size_t accept,
                                   std::vector<BpNode> nodes)
    : variables_(variables), start_(start), accept_(accept), nodes_(std::move(nodes)) {
  const std::size_t s = nodes_.size();
  if (s == 0) malformed("program has no nodes");
  if (start_ >= s || accept_ >= s) malformed("start or accept id out of range");
  if (nodes_[accept_].kind != BpNode::Kind::Sink || !nodes_[accept_].accept) {
    malformed("node " + std::to_string(accept_) + " is not an accepting sink");
  }
  std::vector<std::size_t> indegree(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    const BpNode& n = nodes_[i];
    if (n.kind == BpNode::Kind::Sink) {
      if (n.accept && i != accept_) malformed("more than one accepting sink");
      continue;
    }
    if (n.var < 1 || n.var > variables_) {
      malformed("node " + std::to_string(i) + " reads variable " + std::to_string(n.var));
    }
    if (n.succ0 >= s || n.succ1 >= s) malformed("node " + std::to_string(i) + " successor out of range");
    ++indegree[n.succ0];
    if (n.succ1 != n.succ0) ++indegree[n.succ1];
  }
  // Kahn's algorithm over the successor graph of all settings.
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < s; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  std::size_t visited = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.back();
    queue.pop_back();
    ++visited;
    const BpNode& n = nodes_[u];
    if (n.kind == BpNode::Kind::Sink) continue;
    if (--indegree[n.succ0] == 0) queue.push_back(n.succ0);
    if (n.succ1 != n.succ0 && --indegree[n.succ1] == 0) queue.push_back(n.succ1);
  }
  if (visited != s) malformed("successor graph has a cycle");
}

std::size_t BranchingProgram::next(std::size_t id, std::string_view x) const {
  const BpNode& n = nodes_.at(id);
  if (n.kind != BpNode::Kind::Internal) malformed("sink has no successor");
  const char bit = x[n.var - 1];
  if (bit != '0' && bit != '1') {
    throw Error(ErrorCode::InvalidArgument, "input must consist of '0' and '1'");
  }
  return bit == '1' ? n.succ1 : n.succ0;
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Accept ? "ACCEPT" : "REJECT"; }

namespace {

void check_input(const BranchingProgram& b, std::string_view x) {
  if (x.size() != b.variables()) {
    throw Error(ErrorCode::LengthMismatch, "input has " + std::to_string(x.size()) +
                                               " bits, program reads " +
                                               std::to_string(b.variables()));
  }
  if (x.find_first_not_of("01") != std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "input must consist of '0' and '1'");
  }
}

}  // namespace

Verdict eval_bp(const BranchingProgram& b, std::string_view x) {
  check_input(b, x);
  std::size_t cur = b.start();
  for (std::size_t steps = 0; b.node(cur).kind == BpNode::Kind::Internal; ++steps) {
    if (steps > b.size()) malformed("evaluation did not terminate");
    cur = b.next(cur, x);
  }
  return b.node(cur).accept ? Verdict::Accept : Verdict::Reject;
}

EncodedInstance encode(const BranchingProgram& b, std::string_view x) {
  check_input(b, x);
  const std::size_t s = b.size();
  const std::size_t pend_start = s;
  const std::size_t pend_accept = s + 1;
  const std::size_t nodes = s + 2;

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < s; ++u) {
    if (b.node(u).kind == BpNode::Kind::Internal) edges.emplace_back(u, b.next(u, x));
  }
  edges.emplace_back(pend_start, b.start());
  edges.emplace_back(pend_accept, b.accept());

  DisjointSets forest(nodes);
  for (auto [u, v] : edges) {
    if (!forest.unite(u, v)) malformed("projected graph contains a cycle");
  }
  std::vector<std::size_t> sinks_per_tree(nodes, 0);
  for (std::size_t u = 0; u < s; ++u) {
    if (b.node(u).kind == BpNode::Kind::Sink) ++sinks_per_tree[forest.find(u)];
  }
  for (std::size_t u = 0; u < s; ++u) {
    if (sinks_per_tree[forest.find(u)] != 1) malformed("tree without exactly one sink");
  }

  std::vector<std::vector<std::size_t>> nbrs(nodes);
  for (auto [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (auto& n : nbrs) std::sort(n.begin(), n.end());

  // Point numbering: the dart into start is 1, the dart into accept is last,
  // everything else in (tail, head) order in between.
  std::map<std::pair<std::size_t, std::size_t>, Point> point_of;
  const Point t = static_cast<Point>(2 * edges.size());
  point_of[{pend_start, b.start()}] = 1;
  point_of[{pend_accept, b.accept()}] = t;
  std::vector<std::pair<std::size_t, std::size_t>> rest;
  for (auto [u, v] : edges) {
    for (auto d : {std::pair{u, v}, std::pair{v, u}}) {
      if (!point_of.contains(d)) rest.push_back(d);
    }
  }
  std::sort(rest.begin(), rest.end());
  Point next_point = 2;
  for (auto d : rest) point_of[d] = next_point++;

  EncodedInstance out;
  out.darts.resize(t);
  std::vector<Point> img(t);
  for (const auto& [dart, p] : point_of) {
    const auto [from, at] = dart;
    const auto& around = nbrs[at];
    const auto pos = std::find(around.begin(), around.end(), from) - around.begin();
    const std::size_t to = around[(static_cast<std::size_t>(pos) + 1) % around.size()];
    img[p - 1] = point_of.at({at, to});
    out.darts[p - 1] = Dart{from, at};
  }
  out.sigma = Permutation::from_images(img);
  out.start_point = 1;
  out.accept_point = t;
  return out;
}

bool same_cycle(const Permutation& p, Point a, Point b) {
  const std::size_t t = p.degree();
  if (a < 1 || a > t || b < 1 || b > t) {
    throw Error(ErrorCode::PointOutOfRange, "points must lie in [1, " + std::to_string(t) + "]");
  }
  Point q = a;
  do {
    if (q == b) return true;
    q = p(q);
  } while (q != a);
  return false;
}

BranchingProgram random_program(Rng& rng, std::size_t max_nodes, std::size_t variables) {
  if (max_nodes < 2 || variables < 1) {
    throw Error(ErrorCode::InvalidArgument, "need max_nodes >= 2 and variables >= 1");
  }
  std::uniform_int_distribution<std::size_t> size_dist(2, max_nodes);
  const std::size_t s = size_dist(rng);
  std::uniform_int_distribution<std::size_t> sink_dist(2, std::max<std::size_t>(2, s / 3));
  const std::size_t sinks = std::min(s, sink_dist(rng));
  const std::size_t internal = s - sinks;

  // Positions 0..s-1 form a topological order; ids are a random relabeling.
  std::vector<std::size_t> id(s);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::shuffle(id.begin(), id.end(), rng);

  std::vector<BpNode> nodes(s);
  std::uniform_int_distribution<std::size_t> var_dist(1, variables);
  for (std::size_t pos = 0; pos < internal; ++pos) {
    std::uniform_int_distribution<std::size_t> succ_dist(pos + 1, s - 1);
    nodes[id[pos]] = BpNode::internal(var_dist(rng), id[succ_dist(rng)], id[succ_dist(rng)]);
  }
  std::uniform_int_distribution<std::size_t> accept_dist(internal, s - 1);
  const std::size_t accept_pos = accept_dist(rng);
  for (std::size_t pos = internal; pos < s; ++pos) nodes[id[pos]] = BpNode::sink(pos == accept_pos);
  return BranchingProgram(variables, id[0], id[accept_pos], std::move(nodes));
}

void write_program(std::ostream& os, const BranchingProgram& b) {
  os << "bp " << b.size() << ' ' << b.variables() << ' ' << b.start() << ' ' << b.accept() << '\n';
  for (std::size_t i = 0; i < b.size(); ++i) {
    const BpNode& n = b.node(i);
    if (n.kind == BpNode::Kind::Sink) {
      os << i << " sink " << (n.accept ? "accept" : "reject") << '\n';
    } else {
      os << i << ' ' << n.var << ' ' << n.succ0 << ' ' << n.succ1 << '\n';
    }
  }
}

BranchingProgram read_program(std::istream& is) {
  std::string line;
  bool have_header = false;
  std::size_t s = 0, n = 0, start = 0, accept = 0;
  std::vector<BpNode> nodes;
  std::vector<bool> seen;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      if (first != "bp" || !(ls >> s >> n >> start >> accept) || s == 0) {
        malformed("expected header 'bp s n start accept'");
      }
      nodes.resize(s);
      seen.assign(s, false);
      have_header = true;
      continue;
    }
    std::size_t id = 0;
    try {
      id = std::stoul(first);
    } catch (const std::exception&) {
      malformed("bad node id '" + first + "'");
    }
    if (id >= s || seen[id]) malformed("node id " + first + " out of range or repeated");
    seen[id] = true;
    std::string second;
    if (!(ls >> second)) malformed("truncated node line for " + first);
    if (second == "sink") {
      std::string kind;
      ls >> kind;
      if (kind != "accept" && kind != "reject") malformed("sink must be accept or reject");
      nodes[id] = BpNode::sink(kind == "accept");
    } else {
      std::size_t v0 = 0, v1 = 0;
      if (!(ls >> v0 >> v1)) malformed("node line needs 'id var succ0 succ1'");
      nodes[id] = BpNode::internal(std::stoul(second), v0, v1);
    }
  }
  if (!have_header) malformed("missing header");
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) malformed("missing node lines");
  return BranchingProgram(n, start, accept, std::move(nodes));
}

std::uint64_t program_hash(const BranchingProgram& b) {
  std::ostringstream os;
  write_program(os, b);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace itergroup
