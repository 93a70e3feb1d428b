#include "fusionkit/equations.hpp"

#include <cctype>
#include <sstream>

#include "fusionkit/errors.hpp"

namespace fusionkit {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  StructureEquation parse() {
    StructureEquation eq;
    std::vector<std::size_t> starts{0};
    for (std::size_t i = 0; i < text_.size(); ++i)
      if (text_[i] == '=') starts.push_back(i + 1);
    if (starts.size() < 2) fail("expected '='", 0);
    for (std::size_t s = 0; s + 1 < starts.size(); ++s) {
      pos_ = starts[s];
      end_ = starts[s + 1] - 1;
      eq.products.push_back(product());
    }
    pos_ = starts.back();
    end_ = text_.size();
    eq.rhs = combination();
    return eq;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("structure equation: " + msg, line_, at + 1);
  }

  void skip() {
    while (pos_ < end_ && is_space(text_[pos_])) ++pos_;
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < end_ && !is_digit(text_[pos_]) && !is_space(text_[pos_]) && text_[pos_] != '+') ++pos_;
    if (pos_ == start) fail("expected a basis name", start);
    const std::size_t digits = pos_;
    while (pos_ < end_ && is_digit(text_[pos_])) ++pos_;
    if (pos_ == digits) fail("basis name needs an index", digits);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<std::string, std::string> product() {
    auto a = name();
    auto b = name();
    skip();
    if (pos_ != end_) fail("a product has exactly two factors", pos_);
    return {std::move(a), std::move(b)};
  }

  std::vector<std::pair<std::int64_t, std::string>> combination() {
    std::vector<std::pair<std::int64_t, std::string>> terms;
    skip();
    if (pos_ < end_ && text_[pos_] == '0') {
      ++pos_;
      skip();
      if (pos_ != end_) fail("unexpected text after 0", pos_);
      return terms;
    }
    while (true) {
      skip();
      std::int64_t k = 1;
      if (pos_ < end_ && is_digit(text_[pos_])) {
        k = 0;
        while (pos_ < end_ && is_digit(text_[pos_])) k = k * 10 + (text_[pos_++] - '0');
      }
      terms.emplace_back(k, name());
      skip();
      if (pos_ == end_) break;
      if (text_[pos_] != '+') fail("expected '+'", pos_);
      ++pos_;
    }
    return terms;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

}  // namespace

StructureEquation parse_equation(std::string_view line) { return LineParser(line, 1).parse(); }

std::vector<StructureEquation> parse_equations(std::string_view text) {
  std::vector<StructureEquation> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);
    if (!blank) out.push_back(LineParser(line, line_no).parse());
    start = end + 1;
  }
  return out;
}

std::string render_combination(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    if (terms[i].first != 1) s += std::to_string(terms[i].first);
    s += terms[i].second;
  }
  return s;
}

std::string render_product(const FusionAlgebra& f, int i, int j) {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  for (auto [k, a] : f.product(i, j)) terms.emplace_back(a, f.label(k).name);
  return render_combination(terms);
}

std::string render(const StructureEquation& eq) {
  std::string s;
  for (const auto& [a, b] : eq.products) s += a + " " + b + " = ";
  return s + render_combination(eq.rhs);
}

std::string structure_equations(const FusionAlgebra& f) {
  std::ostringstream out;
  for (int i = 1; i < f.rank(); ++i)
    for (int j = i; j < f.rank(); ++j) {
      out << f.label(i).name << ' ' << f.label(j).name << " = " << render_product(f, i, j) << '\n';
      if (i != j && f.product(i, j) != f.product(j, i))
        out << f.label(j).name << ' ' << f.label(i).name << " = " << render_product(f, j, i) << '\n';
    }
  return out.str();
}

}  // namespace fusionkit
