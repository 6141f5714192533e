#include "ugsolve/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "ugsolve/error.hpp"
#include "ugsolve/permutation.hpp"

namespace ugsolve {

namespace {

/// Yields the non-empty, comment-stripped lines of a stream as token lists.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// False at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (std::getline(in_, buf_)) {
      ++line_;
      if (auto hash = buf_.find('#'); hash != std::string::npos) buf_.resize(hash);
      std::string_view rest(buf_);
      while (true) {
        const auto start = rest.find_first_not_of(" \t\r\f\v");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find_first_of(" \t\r\f\v");
        tokens.push_back(rest.substr(0, end));
        if (end == std::string_view::npos) break;
        rest.remove_prefix(end);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  template <class T>
  T number(std::string_view tok, const char* what) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return value;
  }

  double real(std::string_view tok, const char* what) const {
    std::istringstream s{std::string(tok)};
    s.imbue(std::locale::classic());
    double value = 0.0;
    if (!(s >> value) || !s.eof()) fail(std::string("bad ") + what + " '" + std::string(tok) + "'");
    return value;
  }

  /// Reads a "<key> <value>" line.
  std::string_view keyed(std::string_view key) {
    std::vector<std::string_view> tokens;
    if (!next(tokens)) fail("unexpected end of input, expected '" + std::string(key) + "'");
    if (tokens.size() != 2 || tokens[0] != key) {
      fail("expected '" + std::string(key) + " <value>'");
    }
    return tokens[1];
  }

  void magic(std::string_view word) {
    if (keyed(word) != "1") fail("unsupported " + std::string(word) + " version");
  }

 private:
  std::istream& in_;
  std::string buf_;
  std::size_t line_ = 0;
};

void write_edges(std::ostream& out, const LinEqInstance& g, const DenseInstance* mask) {
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (mask != nullptr && !mask->has_edge(u, v)) continue;
      out << u << ' ' << v << ' ' << g.offset(u, v) << '\n';
    }
  }
}

void write_edges(std::ostream& out, const UgInstance& g, const DenseInstance* mask) {
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (mask != nullptr && !mask->has_edge(u, v)) continue;
      out << u << ' ' << v;
      for (Label x : g.forward(u, v)) out << ' ' << x;
      out << '\n';
    }
  }
}

void write_header(std::ostream& out, bool cyclic, Label q, std::uint32_t n, bool dense) {
  out << "uginst 1\n"
      << "mode " << (cyclic ? "cyclic" : "perm") << '\n'
      << "q " << q << '\n'
      << "n " << n << '\n'
      << "density " << (dense ? "dense" : "full") << '\n';
}

}  // namespace

void write_instance(std::ostream& out, const AnyInstance& any) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, DenseInstance>) {
          write_header(out, g.is_cyclic(), g.q(), g.n(), true);
          std::ostringstream d;
          d.imbue(std::locale::classic());
          d << std::setprecision(std::numeric_limits<double>::max_digits10) << g.delta();
          out << "delta " << d.str() << '\n';
          std::visit([&](const auto& base) { write_edges(out, base, &g); }, g.base());
        } else {
          write_header(out, std::is_same_v<T, LinEqInstance>, g.q(), g.n(), false);
          write_edges(out, g, nullptr);
        }
      },
      any);
}

AnyInstance read_instance(std::istream& in) {
  LineReader r(in);
  r.magic("uginst");
  const auto mode = r.keyed("mode");
  if (mode != "cyclic" && mode != "perm") r.fail("mode must be 'cyclic' or 'perm'");
  const bool cyclic = mode == "cyclic";
  const auto q = r.number<Label>(r.keyed("q"), "alphabet size");
  if (q == 0) r.fail("alphabet size must be positive");
  const auto n = r.number<std::uint32_t>(r.keyed("n"), "vertex count");
  if (n < 2) r.fail("instance needs at least two vertices");
  const auto density = r.keyed("density");
  if (density != "full" && density != "dense") r.fail("density must be 'full' or 'dense'");
  const bool dense = density == "dense";
  if (!cyclic && static_cast<std::uint64_t>(num_pairs(n)) * q > (std::uint64_t{1} << 34)) {
    r.fail("instance too large");
  }

  const std::uint64_t m = num_pairs(n);
  std::vector<std::uint8_t> present(m, 0);
  std::vector<Label> values(cyclic ? m : m * q, 0);
  if (!cyclic) {
    for (std::uint64_t e = 0; e < m; ++e) {
      for (Label x = 0; x < q; ++x) values[e * q + x] = x;
    }
  }
  std::optional<double> delta;
  std::uint64_t edges = 0;

  std::vector<std::string_view> tok;
  while (r.next(tok)) {
    if (tok[0] == "delta") {
      if (!dense) r.fail("delta line in a full instance");
      if (delta || edges > 0) r.fail("delta must follow the header once");
      if (tok.size() != 2) r.fail("expected 'delta <value>'");
      delta = r.real(tok[1], "delta");
      if (!(*delta >= 0.0 && *delta < 1.0)) r.fail("delta must lie in [0, 1)");
      continue;
    }
    const std::size_t want = cyclic ? 3 : 2 + std::size_t{q};
    if (tok.size() != want) {
      r.fail("edge line needs " + std::to_string(want) + " fields, got " +
             std::to_string(tok.size()));
    }
    const auto u = r.number<Vertex>(tok[0], "vertex");
    const auto v = r.number<Vertex>(tok[1], "vertex");
    if (u >= n || v >= n) r.fail("vertex out of range");
    if (u >= v) r.fail("edge must be listed with u < v");
    const auto e = pair_index(n, u, v);
    if (present[e] != 0) r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    present[e] = 1;
    ++edges;
    if (cyclic) {
      const auto c = r.number<Label>(tok[2], "offset");
      if (c >= q) r.fail("offset out of range");
      values[e] = c;
    } else {
      Permutation p(q);
      for (Label x = 0; x < q; ++x) {
        p[x] = r.number<Label>(tok[2 + x], "label");
        if (p[x] >= q) r.fail("permutation entry out of range");
      }
      if (!is_bijection(p)) r.fail("constraint is not a permutation");
      std::copy(p.begin(), p.end(), values.begin() + static_cast<std::ptrdiff_t>(e * q));
    }
  }

  try {
    DenseInstance::Base base = cyclic ? DenseInstance::Base(LinEqInstance(n, q, std::move(values)))
                                      : DenseInstance::Base(UgInstance(n, q, std::move(values)));
    if (!dense) {
      if (edges != m) {
        r.fail("full instance lists " + std::to_string(edges) + " edges, expected " +
               std::to_string(m));
      }
      return std::visit([](auto&& g) -> AnyInstance { return std::move(g); }, std::move(base));
    }
    if (!delta) {
      std::vector<std::uint32_t> degree(n, 0);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (present[pair_index(n, u, v)] != 0) {
            ++degree[u];
            ++degree[v];
          }
        }
      }
      const auto min_deg = *std::min_element(degree.begin(), degree.end());
      delta = std::max(0.0, 1.0 - static_cast<double>(min_deg) / (n - 1));
      if (*delta >= 1.0) r.fail("dense instance has an isolated vertex");
    }
    return DenseInstance(std::move(base), std::move(present), *delta);
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }
}

std::string instance_to_string(const AnyInstance& g) {
  std::ostringstream out;
  write_instance(out, g);
  return out.str();
}

AnyInstance instance_from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_instance(in);
}

void write_assignment(std::ostream& out, const Assignment& a) {
  out << "ugassign 1\n";
  for (std::size_t v = 0; v < a.size(); ++v) out << v << ' ' << a[v] << '\n';
}

Assignment read_assignment(std::istream& in) {
  LineReader r(in);
  r.magic("ugassign");
  std::vector<Label> labels;
  std::vector<std::string_view> tok;
  while (r.next(tok)) {
    if (tok.size() != 2) r.fail("expected '<vertex> <label>'");
    const auto v = r.number<Vertex>(tok[0], "vertex");
    if (v != labels.size()) r.fail("vertices must be listed in order 0, 1, ...");
    const auto x = r.number<Label>(tok[1], "label");
    if (x == kUnlabeled) r.fail("label out of range");
    labels.push_back(x);
  }
  return Assignment(std::move(labels));
}

void write_certificate(std::ostream& out, const PackingCertificate& cert) {
  out << "ugcert 1\n"
      << "seed " << cert.seed << '\n'
      << "triangles " << cert.triangles.size() << '\n';
  for (const auto& t : cert.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

PackingCertificate read_certificate(std::istream& in) {
  LineReader r(in);
  r.magic("ugcert");
  PackingCertificate cert;
  cert.seed = r.number<std::uint64_t>(r.keyed("seed"), "seed");
  const auto k = r.number<std::uint64_t>(r.keyed("triangles"), "triangle count");
  std::vector<std::string_view> tok;
  while (r.next(tok)) {
    if (tok.size() != 3) r.fail("expected 'u v w'");
    Triangle t{};
    for (int i = 0; i < 3; ++i) t[i] = r.number<Vertex>(tok[i], "vertex");
    cert.triangles.push_back(t);
  }
  if (cert.triangles.size() != k) {
    r.fail("certificate lists " + std::to_string(cert.triangles.size()) +
           " triangles, header says " + std::to_string(k));
  }
  return cert;
}

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return in;
}

template <class F>
void write_file(const std::filesystem::path& path, F&& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  f(out);
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace

AnyInstance load_instance(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_instance(in);
}

void save_instance(const std::filesystem::path& path, const AnyInstance& g) {
  write_file(path, [&](std::ostream& out) { write_instance(out, g); });
}

Assignment load_assignment(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_assignment(in);
}

void save_assignment(const std::filesystem::path& path, const Assignment& a) {
  write_file(path, [&](std::ostream& out) { write_assignment(out, a); });
}

}  // namespace ugsolve
