#include "norden/spec_file.hpp"

#include "norden/indexing.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace norden {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_any(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find_first_of(seps, pos), s.size());
    if (auto t = trim(s.substr(pos, end - pos)); !t.empty()) out.push_back(t);
    pos = end + 1;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Returns the right-hand side of "key = value", or nullopt if the key differs.
std::optional<std::string_view> keyed(const Line& line, std::string_view key) {
  const auto eq = line.text.find('=');
  if (eq == std::string_view::npos || trim(line.text.substr(0, eq)) != key) return std::nullopt;
  return trim(line.text.substr(eq + 1));
}

long parse_index(std::string_view s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("expected a basis index, got '" + std::string(s) + "'", line);
  return std::stol(std::string(s));
}

Rational parse_rational(std::string_view s, std::size_t line) {
  try {
    return Rational::parse(s);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

std::vector<Rational> parse_row(const Line& line, std::size_t expected) {
  std::vector<Rational> row;
  for (auto tok : split_any(line.text, " \t,")) row.push_back(parse_rational(tok, line.number));
  if (row.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " entries, got " + std::to_string(row.size()), line.number);
  return row;
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++number;
      std::string_view l = text.substr(pos, end - pos);
      if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
      if (l = trim(l); !l.empty()) lines_.push_back({number, l});
      pos = end + 1;
    }
  }

  AlmostNordenAlgebra parse() {
    header();
    while (cursor_ < lines_.size()) {
      const Line& l = lines_[cursor_++];
      if (l.text == "[metric]")
        once(metric_seen_, l), metric();
      else if (l.text == "[J]")
        once(j_seen_, l), complex_structure();
      else if (l.text == "[brackets]")
        once(brackets_seen_, l), brackets();
      else
        throw ParseError("expected a section header, got '" + std::string(l.text) + "'", l.number);
    }
    const std::size_t n = dim_ / 2;
    LieAlgebra lie = LieAlgebra::from_brackets(dim_, params_, rows_);
    return AlmostNordenAlgebra(std::move(lie), metric_ ? *metric_ : default_metric(n), J_ ? *J_ : default_J(n));
  }

private:
  void once(bool& seen, const Line& l) {
    if (seen) throw ParseError("duplicate section " + std::string(l.text), l.number);
    seen = true;
  }

  bool at_section() const { return cursor_ < lines_.size() && lines_[cursor_].text.front() == '['; }

  void header() {
    if (lines_.empty()) throw ParseError("empty spec file");
    const Line& d = lines_[cursor_++];
    const auto dv = keyed(d, "dimension");
    if (!dv) throw ParseError("expected 'dimension = <even integer>'", d.number);
    const long dim = parse_index(*dv, d.number);
    if (dim <= 0 || dim % 2 != 0) throw ParseError("dimension must be a positive even integer", d.number);
    dim_ = static_cast<std::size_t>(dim);
    if (cursor_ >= lines_.size()) throw ParseError("missing 'parameters = ...' line", d.number);
    const Line& p = lines_[cursor_++];
    const auto pv = keyed(p, "parameters");
    if (!pv) throw ParseError("expected 'parameters = name, ...'", p.number);
    std::vector<std::string> names;
    for (auto n : split_any(*pv, ",")) names.emplace_back(n);
    try {
      params_ = ParameterList(std::move(names));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), p.number);
    }
  }

  RationalMatrix matrix_rows(const Line& header) {
    RationalMatrix m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      if (cursor_ >= lines_.size() || at_section())
        throw ParseError("expected " + std::to_string(dim_) + " matrix rows", header.number);
      const auto row = parse_row(lines_[cursor_++], dim_);
      for (std::size_t c = 0; c < dim_; ++c) m(r, c) = row[c];
    }
    return m;
  }

  void metric() {
    const Line& header = lines_[cursor_ - 1];
    if (cursor_ < lines_.size()) {
      if (const auto dv = keyed(lines_[cursor_], "diag")) {
        const Line& l = lines_[cursor_++];
        metric_ = RationalMatrix::diagonal(parse_row({l.number, *dv}, dim_));
        return;
      }
    }
    metric_ = matrix_rows(header);
  }

  void complex_structure() { J_ = matrix_rows(lines_[cursor_ - 1]); }

  void brackets() {
    while (cursor_ < lines_.size() && !at_section()) bracket_line(lines_[cursor_++]);
  }

  // L R -> T: poly ; T: poly ...
  void bracket_line(const Line& l) {
    const auto arrow = l.text.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'left right -> target: coefficient'", l.number);
    const auto lhs = split_any(l.text.substr(0, arrow), " \t");
    if (lhs.size() != 2) throw ParseError("expected two basis indices before '->'", l.number);
    const long left = parse_index(lhs[0], l.number);
    const long right = parse_index(lhs[1], l.number);
    const std::string entry = "bracket [X" + std::to_string(left) + ", X" + std::to_string(right) + "]";
    auto range = [&](long idx) {
      if (idx < 1 || static_cast<std::size_t>(idx) > dim_)
        throw IndexOutOfRange("line " + std::to_string(l.number) + ": " + entry + ": index " + std::to_string(idx) +
                              " outside 1.." + std::to_string(dim_));
      return from_external(idx, dim_);
    };
    BracketEntry row{range(left), range(right), {}};
    if (left >= right) throw ParseError(entry + ": left index must be smaller than right index", l.number);
    for (auto part : split_any(l.text.substr(arrow + 2), ";")) {
      const auto colon = part.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected 'target: coefficient'", l.number);
      const long target = parse_index(trim(part.substr(0, colon)), l.number);
      const std::size_t k = range(target);
      if (row.targets.count(k)) throw ParseError(entry + ": target X" + std::to_string(target) + " repeated", l.number);
      try {
        row.targets.emplace(k, Poly::parse(part.substr(colon + 1), params_));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), l.number);
      }
    }
    for (const auto& seen : rows_)
      if (seen.left == row.left && seen.right == row.right)
        throw ParseError(entry + " is given more than once", l.number);
    rows_.push_back(std::move(row));
  }

  std::vector<Line> lines_;
  std::size_t cursor_ = 0;
  std::size_t dim_ = 0;
  ParameterList params_;
  std::optional<RationalMatrix> metric_;
  std::optional<RationalMatrix> J_;
  std::vector<BracketEntry> rows_;
  bool metric_seen_ = false, j_seen_ = false, brackets_seen_ = false;
};

void write_rows(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

} // namespace

AlmostNordenAlgebra parse_spec(std::string_view text) { return SpecParser(text).parse(); }

AlmostNordenAlgebra parse_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string emit_spec(const AlmostNordenAlgebra& a) {
  std::ostringstream os;
  const auto& names = a.algebra().parameters().names();
  os << "dimension = " << a.dim() << '\n';
  os << "parameters =";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : " ") << names[i];
  os << "\n\n[metric]\n";
  if (a.g().is_diagonal()) {
    os << "diag =";
    for (std::size_t i = 0; i < a.dim(); ++i) os << (i ? ", " : " ") << a.g()(i, i);
    os << '\n';
  } else {
    write_rows(os, a.g());
  }
  os << "\n[J]\n";
  write_rows(os, a.J());
  os << "\n[brackets]\n";
  const LieAlgebra& lie = a.algebra();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      std::string targets;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (lie.gamma(i, j, k).is_zero()) continue;
        targets += (targets.empty() ? " " : "; ") + std::to_string(to_external(k)) + ": " + lie.gamma(i, j, k).to_string();
      }
      if (!targets.empty()) os << to_external(i) << ' ' << to_external(j) << " ->" << targets << '\n';
    }
  return os.str();
}

} // namespace norden
