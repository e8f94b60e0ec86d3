#include "repgeo/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "repgeo/limits.hpp"

namespace repgeo {

namespace {

constexpr long long kMaxLiteral = 1'000'000'000;
constexpr long long kMaxGroupPower = 1000;
constexpr std::size_t kMaxParsedOrder = 256;
constexpr std::size_t kMaxParsedDim = 64;

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// --- term tokens ------------------------------------------------------------

enum class Tok { ident, integer, star, caret, lparen, rparen, plus, minus, equals, amp, arrow, end };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(std::string_view text, std::size_t line = 1, std::size_t column = 1) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto span_at = [&](std::size_t start, std::size_t len) {
    return SourceSpan{line, column + start, len};
  };
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      out.push_back({Tok::ident, std::string(text.substr(start, i - start)), span_at(start, i - start)});
      continue;
    }
    if (is_digit(c)) {
      while (i < text.size() && is_digit(text[i])) ++i;
      out.push_back({Tok::integer, std::string(text.substr(start, i - start)), span_at(start, i - start)});
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '*':
        kind = Tok::star;
        break;
      case '^':
        kind = Tok::caret;
        break;
      case '(':
        kind = Tok::lparen;
        break;
      case ')':
        kind = Tok::rparen;
        break;
      case '+':
        kind = Tok::plus;
        break;
      case '-':
        kind = Tok::minus;
        break;
      case '&':
        kind = Tok::amp;
        break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::arrow;
          len = 2;
        } else {
          kind = Tok::equals;
        }
        break;
      default:
        throw ParseError(span_at(start, 1), "a term symbol");
    }
    out.push_back({kind, std::string(text.substr(start, len)), span_at(start, len)});
    i += len;
  }
  out.push_back({Tok::end, "", span_at(text.size(), 0)});
  return out;
}

long long literal_value(const Token& t) {
  if (t.text.size() > 10) throw ParseError(t.span, "an integer below 10^9");
  long long v = std::stoll(t.text);
  if (v > kMaxLiteral) throw ParseError(t.span, "an integer below 10^9");
  return v;
}

class TermParser {
 public:
  TermParser(std::vector<Token> tokens, const FreeContext& context)
      : tokens_(std::move(tokens)), ctx_(context) {}

  GroupWord word() {
    std::vector<Letter> raw;
    factor(raw);
    while (accept(Tok::star)) factor(raw);
    return reduce_word(ctx_, raw);
  }

  RingElement ring() {
    RingElement r(ctx_);
    bool negative = accept(Tok::minus);
    if (!negative) accept(Tok::plus);
    ring_term(r, negative);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negative = next().kind == Tok::minus;
      ring_term(r, negative);
    }
    return r;
  }

  ModuleElement module() {
    ModuleElement u(ctx_);
    bool negative = accept(Tok::minus);
    if (!negative) accept(Tok::plus);
    module_term(u, negative);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negative = next().kind == Tok::minus;
      module_term(u, negative);
    }
    return u;
  }

  Atom atom() {
    std::size_t i = pos_;
    while (tokens_[i].kind != Tok::equals && tokens_[i].kind != Tok::amp &&
           tokens_[i].kind != Tok::arrow && tokens_[i].kind != Tok::end) {
      ++i;
    }
    if (tokens_[i].kind != Tok::equals) throw ParseError(tokens_[i].span, "'= 0' or '= 1'");
    const Token& rhs = tokens_[i + 1];
    if (rhs.kind != Tok::integer || (rhs.text != "0" && rhs.text != "1")) {
      throw ParseError(rhs.span, "0 or 1 after '='");
    }
    if (rhs.text == "0") {
      auto u = module();
      expect(Tok::equals, "'='");
      next();
      next();
      return Atom::module_zero(std::move(u));
    }
    auto w = word();
    expect(Tok::equals, "'='");
    next();
    next();
    return Atom::group_one(std::move(w));
  }

  QuasiIdentity qid() {
    if (accept(Tok::arrow)) return QuasiIdentity({}, atom());
    std::vector<Atom> atoms{atom()};
    while (accept(Tok::amp)) atoms.push_back(atom());
    if (accept(Tok::arrow)) return QuasiIdentity(std::move(atoms), atom());
    if (atoms.size() == 1) return QuasiIdentity({}, std::move(atoms.front()));
    throw ParseError(peek().span, "'=>'");
  }

  void expect_end() {
    if (peek().kind != Tok::end) throw ParseError(peek().span, "end of input");
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(peek().span, what);
  }

  long long signed_integer() {
    bool negative = accept(Tok::minus);
    expect(Tok::integer, "an integer");
    long long v = literal_value(next());
    return negative ? -v : v;
  }

  void factor(std::vector<Letter>& raw) {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      auto var = ctx_.find_y(t.text);
      if (!var) {
        if (ctx_.find_x(t.text)) throw ParseError(t.span, "a group variable");
        throw UnknownVariable(t.span, t.text);
      }
      next();
      long long e = accept(Tok::caret) ? signed_integer() : 1;
      raw.push_back({*var, e});
      return;
    }
    if (t.kind == Tok::integer && t.text == "1") {
      next();
      return;
    }
    if (t.kind == Tok::lparen) {
      next();
      auto inner = word();
      expect(Tok::rparen, "')'");
      next();
      long long e = 1;
      if (peek().kind == Tok::caret) {
        const SourceSpan span = peek().span;
        next();
        e = signed_integer();
        if (e > kMaxGroupPower || e < -kMaxGroupPower) {
          throw ParseError(span, "a power of a bracketed word within +-1000");
        }
      }
      const std::vector<Letter> copy = e < 0 ? invert_word(inner).letters() : inner.letters();
      for (long long k = 0; k < (e < 0 ? -e : e); ++k) raw.insert(raw.end(), copy.begin(), copy.end());
      return;
    }
    throw ParseError(t.span, "a group variable, 1 or '('");
  }

  void ring_term(RingElement& r, bool negative) {
    long long coefficient = 1;
    GroupWord w(ctx_);
    if (peek().kind == Tok::integer) {
      coefficient = literal_value(peek());
      if (peek(1).kind == Tok::star) {
        next();
        next();
        w = word();
      } else {
        next();
      }
    } else {
      w = word();
    }
    r.add_term(w, ctx_.field().reduce(negative ? -coefficient : coefficient));
  }

  void module_term(ModuleElement& u, bool negative) {
    long long coefficient = 1;
    if (peek().kind == Tok::integer) {
      const Token& t = peek();
      if (peek(1).kind == Tok::star && peek(2).kind == Tok::ident) {
        coefficient = literal_value(t);
        next();
        next();
      } else if (t.text == "0") {
        next();
        return;
      } else {
        throw ParseError(t.span, "an X-variable term");
      }
    }
    const Token& xt = peek();
    if (xt.kind != Tok::ident) throw ParseError(xt.span, "an X-variable");
    auto x = ctx_.find_x(xt.text);
    if (!x) {
      if (ctx_.find_y(xt.text)) throw ParseError(xt.span, "an X-variable");
      throw UnknownVariable(xt.span, xt.text);
    }
    next();
    RingElement part = RingElement::one(ctx_);
    if (accept(Tok::star)) {
      if (accept(Tok::lparen)) {
        part = ring();
        expect(Tok::rparen, "')'");
        next();
      } else {
        part = RingElement::from_word(word());
      }
    }
    Scalar c = ctx_.field().reduce(negative ? -coefficient : coefficient);
    u = u + ModuleElement::from_part(*x, ring_scale(c, part));
  }

  std::vector<Token> tokens_;
  const FreeContext& ctx_;
  std::size_t pos_ = 0;
};

template <class F>
auto parse_with(std::string_view text, const FreeContext& ctx, F&& f, std::size_t line = 1,
                std::size_t column = 1) {
  TermParser p(tokenize(text, line, column), ctx);
  auto value = f(p);
  p.expect_end();
  return value;
}

// --- line-oriented files ----------------------------------------------------

struct Line {
  std::size_t number;
  std::size_t column;  // 1-based column of text[0]
  std::string_view text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    while (lead < line.size() && is_space(line[lead])) ++lead;
    std::size_t trail = line.size();
    while (trail > lead && is_space(line[trail - 1])) --trail;
    if (trail > lead) out.push_back({number, lead + 1, line.substr(lead, trail - lead)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

struct Word {
  std::string_view text;
  SourceSpan span;
};

std::vector<Word> split_words(const Line& line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.text.size()) {
    while (i < line.text.size() && is_space(line.text[i])) ++i;
    std::size_t start = i;
    while (i < line.text.size() && !is_space(line.text[i])) ++i;
    if (i > start) {
      out.push_back({line.text.substr(start, i - start),
                     SourceSpan{line.number, line.column + start, i - start}});
    }
  }
  return out;
}

SourceSpan line_span(const Line& line) { return {line.number, line.column, line.text.size()}; }

SourceSpan end_span(const std::vector<Line>& lines) {
  return {lines.empty() ? 1 : lines.back().number + 1, 1, 0};
}

// Rethrows library errors with the given span attached.
template <class F>
auto at_span(SourceSpan span, F&& f) {
  try {
    return f();
  } catch (ParseError&) {
    throw;
  } catch (Error& e) {
    e.set_span(span);
    throw;
  }
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() { return lines_[pos_++]; }
  SourceSpan here() const { return done() ? end_span(lines_) : line_span(peek()); }

  /// Consumes a line starting with `keyword`, returning the rest.
  const Line& expect(std::string_view keyword) {
    if (done() || first_word() != keyword) throw ParseError(here(), std::string(keyword));
    return next();
  }
  std::string_view first_word() const {
    auto w = split_words(peek());
    return w.empty() ? std::string_view{} : w.front().text;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

// Text after the first word of a line, with its starting column.
std::pair<std::string_view, std::size_t> rest_of(const Line& line, std::string_view keyword) {
  std::size_t i = keyword.size();
  while (i < line.text.size() && is_space(line.text[i])) ++i;
  return {line.text.substr(i), line.column + i};
}

std::size_t parse_count(std::string_view text, SourceSpan span, std::size_t lo, std::size_t hi,
                        const std::string& what) {
  if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), is_digit)) {
    throw ParseError(span, what);
  }
  std::size_t v = std::stoul(std::string(text));
  if (v < lo || v > hi) throw ParseError(span, what);
  return v;
}

// --- group expressions: cyclic(n) [as name] | product(g, h) | trivial ---

class GroupExprParser {
 public:
  GroupExprParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  FiniteGroup parse() {
    auto g = expr();
    skip();
    if (i_ != text_.size()) throw ParseError(span(1), "end of group expression");
    return g;
  }

 private:
  SourceSpan span(std::size_t len) const { return {line_, column_ + i_, len}; }
  void skip() {
    while (i_ < text_.size() && is_space(text_[i_])) ++i_;
  }
  std::string_view ident() {
    skip();
    std::size_t start = i_;
    while (i_ < text_.size() && is_ident_char(text_[i_])) ++i_;
    return text_.substr(start, i_ - start);
  }
  void expect(char c) {
    skip();
    if (i_ >= text_.size() || text_[i_] != c) throw ParseError(span(1), std::string("'") + c + "'");
    ++i_;
  }

  FiniteGroup expr() {
    skip();
    const SourceSpan at = span(0);
    auto keyword = ident();
    if (keyword == "trivial") return cyclic_group(1);
    if (keyword == "cyclic") {
      expect('(');
      skip();
      std::size_t start = i_;
      while (i_ < text_.size() && is_digit(text_[i_])) ++i_;
      SourceSpan nspan{line_, column_ + start, i_ - start};
      auto n = parse_count(text_.substr(start, i_ - start), nspan, 1, kMaxParsedOrder,
                           "a cyclic order between 1 and 256");
      expect(')');
      std::string gen = "g";
      std::size_t save = i_;
      if (ident() == "as") {
        auto name = ident();
        if (name.empty()) throw ParseError(span(1), "a generator name");
        gen = std::string(name);
      } else {
        i_ = save;
      }
      return cyclic_group(n, gen);
    }
    if (keyword == "product") {
      expect('(');
      auto left = expr();
      expect(',');
      auto right = expr();
      expect(')');
      if (left.order() * right.order() > kMaxParsedOrder) {
        throw ParseError(at, "a product of order at most 256");
      }
      return at_span(at, [&] { return product_group(left, right); });
    }
    throw ParseError(at, "'table', 'cyclic(n)', 'product(..., ...)' or 'trivial'");
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t i_ = 0;
};

FiniteGroup parse_group_section(Cursor& cur) {
  const Line& head = cur.expect("group");
  auto [rest, col] = rest_of(head, "group");
  if (rest.empty()) throw ParseError(line_span(head), "a group description after 'group'");
  if (rest != "table") return GroupExprParser(rest, head.number, col).parse();

  const Line& elements = cur.expect("elements");
  auto names = split_words(elements);
  names.erase(names.begin());
  if (names.empty()) throw ParseError(line_span(elements), "at least one element name");
  if (names.size() > kMaxParsedOrder) throw ParseError(line_span(elements), "at most 256 elements");
  std::map<std::string_view, std::size_t> index;
  std::vector<std::string> owned;
  for (const auto& w : names) {
    if (!index.emplace(w.text, owned.size()).second) {
      throw ParseError(w.span, "distinct element names");
    }
    owned.emplace_back(w.text);
  }
  const std::size_t n = owned.size();
  std::vector<std::vector<std::size_t>> table;
  std::vector<SourceSpan> row_spans;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& row = cur.expect("row");
    auto entries = split_words(row);
    entries.erase(entries.begin());
    if (entries.size() != n) {
      throw ParseError(line_span(row), std::to_string(n) + " entries in row");
    }
    std::vector<std::size_t> values;
    for (const auto& e : entries) {
      auto it = index.find(e.text);
      if (it == index.end()) throw ParseError(e.span, "an element name");
      values.push_back(it->second);
    }
    table.push_back(std::move(values));
    row_spans.push_back(line_span(row));
  }
  try {
    return FiniteGroup::from_table(std::move(owned), table);
  } catch (NotAGroup& e) {
    e.set_span(row_spans[e.witness()[0]]);
    throw;
  } catch (Error& e) {
    e.set_span(line_span(head));
    throw;
  }
}

// Matrix literal [[a,b],[c,d]] starting at `column` of `line`.
Matrix parse_matrix_at(std::string_view text, const PrimeField& field, std::size_t line,
                       std::size_t column) {
  std::size_t i = 0;
  auto span = [&](std::size_t len) { return SourceSpan{line, column + i, len}; };
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(span(1), std::string("'") + c + "'");
    ++i;
  };
  auto peek_is = [&](char c) {
    skip();
    return i < text.size() && text[i] == c;
  };
  auto number = [&]() -> long long {
    skip();
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == start || i - start > 9) {
      i = start;
      throw ParseError(span(1), "a decimal matrix entry");
    }
    long long v = std::stoll(std::string(text.substr(start, i - start)));
    return negative ? -v : v;
  };

  std::vector<std::vector<long long>> rows;
  expect('[');
  do {
    expect('[');
    std::vector<long long> row{number()};
    while (peek_is(',')) {
      ++i;
      row.push_back(number());
    }
    expect(']');
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(span(1), "rows of equal length");
    }
    if (row.size() > kMaxParsedDim || rows.size() >= kMaxParsedDim) {
      throw ParseError(span(1), "at most 64 rows and columns");
    }
    rows.push_back(std::move(row));
  } while (peek_is(',') && (++i, true));
  expect(']');
  skip();
  if (i != text.size()) throw ParseError(span(1), "end of matrix");
  return Matrix::from_rows(field, rows);
}

bool starts_with_x(std::string_view name) { return !name.empty() && name.front() == 'x'; }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

// --- public parsers ---------------------------------------------------------

GroupWord parse_word(std::string_view text, const FreeContext& context) {
  return parse_with(text, context, [](TermParser& p) { return p.word(); });
}

RingElement parse_ring(std::string_view text, const FreeContext& context) {
  return parse_with(text, context, [](TermParser& p) { return p.ring(); });
}

ModuleElement parse_module(std::string_view text, const FreeContext& context) {
  return parse_with(text, context, [](TermParser& p) { return p.module(); });
}

std::variant<ModuleElement, GroupWord> parse_term(std::string_view text, const FreeContext& context) {
  for (const auto& t : tokenize(text)) {
    if (t.kind == Tok::ident && context.find_x(t.text)) {
      return parse_module(text, context);
    }
  }
  return parse_word(text, context);
}

Atom parse_atom(std::string_view text, const FreeContext& context) {
  return parse_with(text, context, [](TermParser& p) { return p.atom(); });
}

QuasiIdentity parse_qid(std::string_view text, const FreeContext& context) {
  return parse_with(text, context, [](TermParser& p) { return p.qid(); });
}

FreeContext infer_context(std::string_view text, const PrimeField& field) {
  std::set<std::string> xs;
  std::set<std::string> ys;
  for (const auto& t : tokenize(text)) {
    if (t.kind != Tok::ident) continue;
    (starts_with_x(t.text) ? xs : ys).insert(t.text);
  }
  return FreeContext(field, {xs.begin(), xs.end()}, {ys.begin(), ys.end()});
}

Matrix parse_matrix(std::string_view text, const PrimeField& field) {
  return parse_matrix_at(text, field, 1, 1);
}

FiniteGroup parse_group_file(std::string_view text) {
  Cursor cur(significant_lines(text));
  auto g = parse_group_section(cur);
  if (!cur.done()) throw ParseError(cur.here(), "end of group file");
  return g;
}

Representation parse_rep_file(std::string_view text) {
  Cursor cur(significant_lines(text));

  const Line& field_line = cur.expect("field");
  auto [field_text, field_col] = rest_of(field_line, "field");
  std::string compact;
  for (char c : field_text) {
    if (!is_space(c)) compact += c;
  }
  SourceSpan field_span{field_line.number, field_col, field_text.size()};
  if (compact.rfind("p=", 0) != 0) throw ParseError(field_span, "p=<prime>");
  auto p = parse_count(std::string_view(compact).substr(2), field_span, 0, 1'000'000'000, "p=<prime>");
  PrimeField field = at_span(field_span, [&] { return PrimeField(static_cast<std::uint32_t>(p)); });

  FiniteGroup group = parse_group_section(cur);

  const Line& dim_line = cur.expect("dim");
  auto [dim_text, dim_col] = rest_of(dim_line, "dim");
  std::size_t dim = parse_count(dim_text, SourceSpan{dim_line.number, dim_col, dim_text.size()}, 1,
                                kMaxParsedDim, "a dimension between 1 and 64");

  std::map<Element, Matrix> act;
  std::map<Element, SourceSpan> act_spans;
  while (!cur.done()) {
    const Line& line = cur.expect("act");
    auto [rest, col] = rest_of(line, "act");
    auto eq = rest.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_span(line), "'act <element> = <matrix>'");
    std::string_view name = rest.substr(0, eq);
    while (!name.empty() && is_space(name.back())) name.remove_suffix(1);
    SourceSpan name_span{line.number, col, name.size()};
    auto g = group.find(name);
    if (!g) throw ParseError(name_span, "an element name");
    if (*g == kIdentity) throw ParseError(name_span, "a non-identity element");
    if (act.count(*g)) throw ParseError(name_span, "each element at most once");
    Matrix m = parse_matrix_at(rest.substr(eq + 1), field, line.number, col + eq + 1);
    if (m.rows() != dim || m.cols() != dim) {
      DimensionMismatch e("action of '" + std::string(name) + "' is " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dim) + "x" +
                          std::to_string(dim));
      e.set_span(line_span(line));
      throw e;
    }
    act.emplace(*g, std::move(m));
    act_spans.emplace(*g, line_span(line));
  }
  for (Element g = 1; g < group.order(); ++g) {
    if (!act.count(g)) throw ParseError(cur.here(), "act line for element '" + group.name(g) + "'");
  }
  try {
    return Representation::make(field, dim, group, act);
  } catch (NotAnAction& e) {
    Element at = e.g() != kIdentity ? e.g() : e.h();
    if (auto it = act_spans.find(at); it != act_spans.end()) e.set_span(it->second);
    throw;
  }
}

SystemFile parse_system_file(std::string_view text, const PrimeField& field) {
  auto lines = significant_lines(text);
  std::optional<std::vector<std::string>> xvars;
  std::optional<std::vector<std::string>> yvars;
  struct Pending {
    bool module;
    std::string_view text;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Pending> pending;

  for (const auto& line : lines) {
    auto words = split_words(line);
    const auto head = words.front().text;
    if (head == "xvars" || head == "yvars") {
      if (!pending.empty()) throw ParseError(line_span(line), "variable headers before equations");
      auto& slot = head == "xvars" ? xvars : yvars;
      if (slot) throw ParseError(words.front().span, "a single '" + std::string(head) + "' header");
      slot.emplace();
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto& w = words[i];
        if (!is_ident_start(w.text.front()) ||
            !std::all_of(w.text.begin(), w.text.end(), is_ident_char)) {
          throw ParseError(w.span, "a variable name");
        }
        slot->emplace_back(w.text);
      }
      continue;
    }
    bool module;
    std::size_t skip;
    if (line.text.rfind("module:", 0) == 0) {
      module = true;
      skip = 7;
    } else if (line.text.rfind("group:", 0) == 0) {
      module = false;
      skip = 6;
    } else {
      throw ParseError(line_span(line), "'xvars', 'yvars', 'module:' or 'group:'");
    }
    pending.push_back({module, line.text.substr(skip), line.number, line.column + skip});
  }

  std::optional<FreeContext> ctx;
  if (xvars || yvars) {
    ctx.emplace(at_span(end_span(lines), [&] {
      return FreeContext(field, xvars.value_or(std::vector<std::string>{}),
                         yvars.value_or(std::vector<std::string>{}));
    }));
  } else {
    std::set<std::string> xs;
    std::set<std::string> ys;
    for (const auto& p : pending) {
      for (const auto& t : tokenize(p.text, p.line, p.column)) {
        if (t.kind == Tok::ident) (starts_with_x(t.text) ? xs : ys).insert(t.text);
      }
    }
    ctx.emplace(field, std::vector<std::string>(xs.begin(), xs.end()),
                std::vector<std::string>(ys.begin(), ys.end()));
  }

  std::vector<ModuleElement> module_part;
  std::vector<GroupWord> group_part;
  for (const auto& p : pending) {
    Atom a = parse_with(p.text, *ctx, [](TermParser& tp) { return tp.atom(); }, p.line, p.column);
    if (a.is_module() != p.module) {
      throw ParseError(SourceSpan{p.line, p.column, p.text.size()},
                       p.module ? "a module equation '<expr> = 0'" : "a group equation '<word> = 1'");
    }
    if (a.is_module()) {
      module_part.push_back(a.module());
    } else {
      group_part.push_back(a.word());
    }
  }
  return {*ctx, EquationSystem(*ctx, std::move(module_part), std::move(group_part))};
}

// --- serialization ----------------------------------------------------------

std::string serialize(const GroupWord& w) {
  if (w.is_identity()) return "1";
  std::vector<std::string> parts;
  for (const auto& l : w.letters()) {
    std::string s = w.context().yvars()[l.var];
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
    parts.push_back(std::move(s));
  }
  return join(parts, "*");
}

namespace {

// "c*body" with unit coefficients elided; sign handled by the caller.
std::string scaled_text(long long magnitude, const std::string& body, bool body_is_one) {
  if (body_is_one) return std::to_string(magnitude);
  if (magnitude == 1) return body;
  return std::to_string(magnitude) + "*" + body;
}

void append_signed(std::string& out, long long sign_value, const std::string& text) {
  if (out.empty()) {
    out = (sign_value < 0 ? "-" : "") + text;
  } else {
    out += (sign_value < 0 ? " - " : " + ") + text;
  }
}

}  // namespace

std::string serialize(const RingElement& r) {
  if (r.is_zero()) return "0";
  const auto& f = r.context().field();
  std::string out;
  // Highest word first, as in "y - 1".
  for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
    long long s = f.signed_value(it->second);
    append_signed(out, s, scaled_text(s < 0 ? -s : s, serialize(it->first), it->first.is_identity()));
  }
  return out;
}

std::string serialize(const ModuleElement& u) {
  if (u.is_zero()) return "0";
  const auto& ctx = u.context();
  std::string out;
  for (const auto& [x, part] : u.parts()) {
    const std::string& name = ctx.xvars()[x];
    if (part.terms().size() == 1) {
      const auto& [w, c] = *part.terms().begin();
      long long s = ctx.field().signed_value(c);
      std::string body = w.is_identity() ? name : name + "*" + serialize(w);
      append_signed(out, s, scaled_text(s < 0 ? -s : s, body, false));
    } else {
      append_signed(out, 1, name + "*(" + serialize(part) + ")");
    }
  }
  return out;
}

std::string serialize(const Atom& a) {
  return a.is_module() ? serialize(a.module()) + " = 0" : serialize(a.word()) + " = 1";
}

std::string serialize(const QuasiIdentity& q) {
  std::vector<std::string> premises;
  for (const auto& p : q.premises()) premises.push_back(serialize(p));
  if (premises.empty()) return "=> " + serialize(q.conclusion());
  return join(premises, " & ") + " => " + serialize(q.conclusion());
}

std::string serialize(const EquationSystem& s) {
  std::string out = "xvars";
  for (const auto& x : s.context().xvars()) out += " " + x;
  out += "\nyvars";
  for (const auto& y : s.context().yvars()) out += " " + y;
  out += "\n";
  for (const auto& u : s.module_part()) out += "module: " + serialize(u) + " = 0\n";
  for (const auto& w : s.group_part()) out += "group: " + serialize(w) + " = 1\n";
  return out;
}

std::string serialize(const FiniteGroup& g) {
  std::string out = "group table\n  elements " + join(g.names(), " ") + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    std::vector<std::string> row;
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    out += "  row " + join(row, " ") + "\n";
  }
  return out;
}

std::string serialize(const Matrix& m) { return to_string(m); }

std::string serialize(const Representation& r) {
  std::string out = "field p=" + std::to_string(r.field().p()) + "\n";
  out += serialize(r.group());
  out += "dim " + std::to_string(r.dim()) + "\n";
  for (Element g = 1; g < r.group().order(); ++g) {
    out += "act " + r.group().name(g) + " = " + serialize(r.action(g)) + "\n";
  }
  return out;
}

}  // namespace repgeo
