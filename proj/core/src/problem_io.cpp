#include "dnt/problem_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace dnt {

namespace {

constexpr std::string_view kSections[] = {
    "weight-scale", "rating-scale", "experts",  "criteria",
    "candidates",   "weights",      "ratings",  "options"};

bool is_reserved(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '=' || c == '(' ||
         c == ')' || c == ',' || c == '[' || c == ']' || c == '#';
}

bool valid_token(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  return std::none_of(s.begin(), s.end(), is_reserved);
}

[[noreturn]] void fail(int line, int col, std::string_view section,
                       const std::string& message) {
  throw ParseError(line, col, std::string(section), message);
}

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

// One logical line: comment stripped, split into tokens plus the punctuation
// the grammar knows about ('=', '(', ')', ',').
struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text, std::string_view current_section,
                           int& bad_line, int& bad_col) {
  (void)current_section;
  (void)bad_line;
  (void)bad_col;
  std::vector<Line> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line;
    line.number = line_no;
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '=' || c == '(' || c == ')' || c == ',' || c == '[' || c == ']') {
        line.tokens.push_back({raw.substr(i, 1), static_cast<int>(i + 1)});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !is_reserved(raw[j])) {
        ++j;
      }
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i + 1)});
      i = j;
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (end == text.size()) {
      break;
    }
    start = end + 1;
  }
  return lines;
}

double parse_number(const Token& tok, int line, std::string_view section) {
  const std::string text(tok.text);
  char* endp = nullptr;
  const double v = std::strtod(text.c_str(), &endp);
  if (endp != text.c_str() + text.size() || !std::isfinite(v)) {
    fail(line, tok.column, section, "expected a number, got \"" + text + "\"");
  }
  return v;
}

struct RawTerm {
  std::string label;
  double a, b, c;
  int line, column;
};

struct RawScale {
  bool present = false;
  int header_line = 0;
  bool has_universe = false;
  double lo = 0.0, hi = 0.0;
  int universe_line = 0;
  std::vector<RawTerm> terms;
};

struct RawItem {
  std::string label;
  int line, column;
};

struct RawList {
  bool present = false;
  int header_line = 0;
  std::vector<RawItem> items;
};

struct RawRow {
  std::vector<std::string> keys;  // criterion [candidate]
  std::vector<Token> values;
  int line;
  std::string values_text;  // owned storage for value tokens
};

struct RawTable {
  bool present = false;
  int header_line = 0;
  std::vector<RawRow> rows;
};

struct RawOptions {
  bool present = false;
  int header_line = 0;
  std::optional<std::pair<std::string, int>> msd_threshold;  // value, line
  std::optional<std::pair<double, int>> epsilon_override;
  std::optional<std::pair<int, int>> precision;
};

LinguisticScale build_scale(const RawScale& raw, std::string_view section) {
  if (!raw.present) {
    fail(1, 1, section, "missing [" + std::string(section) + "] section");
  }
  if (!raw.has_universe) {
    fail(raw.header_line, 1, section, "missing universe");
  }
  if (raw.terms.empty()) {
    fail(raw.header_line, 1, section, "scale needs at least one term");
  }
  // Per-term diagnostics first; the constructor re-validates as a backstop.
  for (std::size_t i = 0; i < raw.terms.size(); ++i) {
    const auto& t = raw.terms[i];
    if (!(t.a <= t.b && t.b <= t.c)) {
      fail(t.line, t.column, section,
           "term \"" + t.label + "\" requires a <= b <= c");
    }
    if (t.a < raw.lo || t.c > raw.hi) {
      fail(t.line, t.column, section,
           "support of term \"" + t.label + "\" lies outside the universe");
    }
    if (i > 0 && raw.terms[i - 1].b > t.b) {
      fail(t.line, t.column, section,
           "term \"" + t.label + "\" is out of mode order");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (raw.terms[j].label == t.label) {
        fail(t.line, t.column, section, "duplicate term \"" + t.label + "\"");
      }
    }
  }
  std::vector<LinguisticScale::Term> terms;
  terms.reserve(raw.terms.size());
  for (const auto& t : raw.terms) {
    terms.push_back({t.label, {t.a, t.b, t.c}});
  }
  try {
    return {std::move(terms), {raw.lo, raw.hi}};
  } catch (const std::invalid_argument& e) {
    fail(raw.header_line, 1, section, e.what());
  }
}

std::vector<std::string> build_list(const RawList& raw, std::string_view section) {
  if (!raw.present) {
    fail(1, 1, section, "missing [" + std::string(section) + "] section");
  }
  if (raw.items.empty()) {
    fail(raw.header_line, 1, section,
         "section [" + std::string(section) + "] must not be empty");
  }
  std::vector<std::string> out;
  for (const auto& item : raw.items) {
    if (std::find(out.begin(), out.end(), item.label) != out.end()) {
      fail(item.line, item.column, section, "duplicate label \"" + item.label + "\"");
    }
    out.push_back(item.label);
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string section,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) +
                         (section.empty() ? std::string{}
                                          : " [" + section + "]") +
                         ": " + message),
      line_(line), column_(column), section_(std::move(section)) {}

ParsedProblem parse_problem(std::string_view text) {
  int bad_line = 0, bad_col = 0;
  const auto lines = tokenize(text, "", bad_line, bad_col);

  RawScale weight_scale_raw, rating_scale_raw;
  RawList experts_raw, criteria_raw, candidates_raw;
  RawTable weights_raw, ratings_raw;
  RawOptions options_raw;

  std::string_view section;
  for (const auto& line : lines) {
    const auto& toks = line.tokens;
    // Section header: [ name ]
    if (toks.front().text == "[") {
      if (toks.size() != 3 || toks[2].text != "]") {
        fail(line.number, toks.front().column, section, "malformed section header");
      }
      const std::string_view name = toks[1].text;
      if (std::find(std::begin(kSections), std::end(kSections), name) ==
          std::end(kSections)) {
        fail(line.number, toks[1].column, section,
             "unknown section [" + std::string(name) + "]");
      }
      auto mark = [&](bool& present, int& header_line) {
        if (present) {
          fail(line.number, toks[1].column, name,
               "duplicate section [" + std::string(name) + "]");
        }
        present = true;
        header_line = line.number;
      };
      if (name == "weight-scale") mark(weight_scale_raw.present, weight_scale_raw.header_line);
      else if (name == "rating-scale") mark(rating_scale_raw.present, rating_scale_raw.header_line);
      else if (name == "experts") mark(experts_raw.present, experts_raw.header_line);
      else if (name == "criteria") mark(criteria_raw.present, criteria_raw.header_line);
      else if (name == "candidates") mark(candidates_raw.present, candidates_raw.header_line);
      else if (name == "weights") mark(weights_raw.present, weights_raw.header_line);
      else if (name == "ratings") mark(ratings_raw.present, ratings_raw.header_line);
      else mark(options_raw.present, options_raw.header_line);
      section = name;
      continue;
    }
    if (section.empty()) {
      fail(line.number, toks.front().column, section, "content before any section");
    }

    if (section == "weight-scale" || section == "rating-scale") {
      RawScale& raw = section == "weight-scale" ? weight_scale_raw : rating_scale_raw;
      if (toks.front().text == "universe") {
        if (toks.size() != 4 || toks[1].text != "=") {
          fail(line.number, toks.front().column, section,
               "expected: universe = <lo> <hi>");
        }
        if (raw.has_universe) {
          fail(line.number, toks.front().column, section, "duplicate universe");
        }
        raw.lo = parse_number(toks[2], line.number, section);
        raw.hi = parse_number(toks[3], line.number, section);
        if (!(raw.lo < raw.hi)) {
          fail(line.number, toks[2].column, section, "universe must satisfy lo < hi");
        }
        raw.has_universe = true;
        raw.universe_line = line.number;
        continue;
      }
      // <label> = ( a , b , c )
      if (toks.size() != 9 || toks[1].text != "=" || toks[2].text != "(" ||
          toks[4].text != "," || toks[6].text != "," || toks[8].text != ")") {
        fail(line.number, toks.front().column, section,
             "expected: <label> = (<a>, <b>, <c>)");
      }
      if (!valid_token(toks.front().text)) {
        fail(line.number, toks.front().column, section, "invalid term label");
      }
      raw.terms.push_back({std::string(toks.front().text),
                           parse_number(toks[3], line.number, section),
                           parse_number(toks[5], line.number, section),
                           parse_number(toks[7], line.number, section),
                           line.number, toks.front().column});
      continue;
    }

    if (section == "experts" || section == "criteria" || section == "candidates") {
      RawList& raw = section == "experts" ? experts_raw
                     : section == "criteria" ? criteria_raw
                                             : candidates_raw;
      if (toks.size() != 1 || !valid_token(toks.front().text)) {
        fail(line.number, toks.front().column, section, "expected one label per line");
      }
      raw.items.push_back({std::string(toks.front().text), line.number,
                           toks.front().column});
      continue;
    }

    if (section == "weights" || section == "ratings") {
      RawTable& raw = section == "weights" ? weights_raw : ratings_raw;
      const std::size_t n_keys = section == "weights" ? 1 : 2;
      if (toks.size() < n_keys + 2 || toks[n_keys].text != "=") {
        fail(line.number, toks.front().column, section,
             section == "weights" ? "expected: <criterion> = <label per expert>"
                                  : "expected: <criterion> <candidate> = <label per expert>");
      }
      RawRow row;
      row.line = line.number;
      for (std::size_t k = 0; k < n_keys; ++k) {
        if (!valid_token(toks[k].text)) {
          fail(line.number, toks[k].column, section, "invalid label");
        }
        row.keys.emplace_back(toks[k].text);
      }
      for (std::size_t k = n_keys + 1; k < toks.size(); ++k) {
        if (!valid_token(toks[k].text)) {
          fail(line.number, toks[k].column, section, "invalid label");
        }
        row.values.push_back(toks[k]);
      }
      raw.rows.push_back(std::move(row));
      continue;
    }

    // options
    if (toks.size() < 3 || toks[1].text != "=") {
      fail(line.number, toks.front().column, section, "expected: <key> = <value>");
    }
    const std::string_view key = toks.front().text;
    if (key == "msd-threshold") {
      if (toks.size() != 3 || !valid_token(toks[2].text)) {
        fail(line.number, toks[2].column, section, "expected a term label");
      }
      if (options_raw.msd_threshold) {
        fail(line.number, toks.front().column, section, "duplicate msd-threshold");
      }
      options_raw.msd_threshold = {std::string(toks[2].text), line.number};
    } else if (key == "epsilon-override") {
      if (toks.size() != 3) {
        fail(line.number, toks.front().column, section, "expected one number");
      }
      if (options_raw.epsilon_override) {
        fail(line.number, toks.front().column, section, "duplicate epsilon-override");
      }
      const double v = parse_number(toks[2], line.number, section);
      if (!(v >= 0.0 && v <= 1.0)) {
        fail(line.number, toks[2].column, section,
             "epsilon-override must lie in [0, 1]");
      }
      options_raw.epsilon_override = {v, line.number};
    } else if (key == "precision") {
      if (toks.size() != 3) {
        fail(line.number, toks.front().column, section, "expected one integer");
      }
      if (options_raw.precision) {
        fail(line.number, toks.front().column, section, "duplicate precision");
      }
      int v = 0;
      const auto text = toks[2].text;
      const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || v < 0 ||
          v > 12) {
        fail(line.number, toks[2].column, section,
             "precision must be an integer in [0, 12]");
      }
      options_raw.precision = {v, line.number};
    } else {
      fail(line.number, toks.front().column, section,
           "unknown option \"" + std::string(key) + "\"");
    }
  }

  // --- assemble and validate ---
  LinguisticScale weight_scale = build_scale(weight_scale_raw, "weight-scale");
  LinguisticScale rating_scale = build_scale(rating_scale_raw, "rating-scale");
  std::vector<std::string> experts = build_list(experts_raw, "experts");
  std::vector<std::string> criteria = build_list(criteria_raw, "criteria");
  std::vector<std::string> candidates = build_list(candidates_raw, "candidates");

  auto index_in = [](const std::vector<std::string>& labels, std::string_view l) {
    const auto it = std::find(labels.begin(), labels.end(), l);
    return it == labels.end() ? std::optional<std::size_t>{}
                              : std::optional<std::size_t>{static_cast<std::size_t>(
                                    it - labels.begin())};
  };

  if (!weights_raw.present) {
    fail(1, 1, "weights", "missing [weights] section");
  }
  std::vector<std::vector<std::size_t>> weights(
      criteria.size(), std::vector<std::size_t>(experts.size()));
  std::vector<bool> have_weight_row(criteria.size(), false);
  for (const auto& row : weights_raw.rows) {
    const auto c = index_in(criteria, row.keys[0]);
    if (!c) {
      fail(row.line, 1, "weights", "unknown criterion \"" + row.keys[0] + "\"");
    }
    if (have_weight_row[*c]) {
      fail(row.line, 1, "weights", "duplicate weights for " + row.keys[0]);
    }
    if (row.values.size() != experts.size()) {
      fail(row.line, 1, "weights",
           "expected " + std::to_string(experts.size()) + " weight labels for " +
               row.keys[0] + ", got " + std::to_string(row.values.size()));
    }
    for (std::size_t e = 0; e < experts.size(); ++e) {
      const auto idx = weight_scale.index_of(row.values[e].text);
      if (!idx) {
        fail(row.line, row.values[e].column, "weights",
             "weight label \"" + std::string(row.values[e].text) + "\" for (" +
                 row.keys[0] + ", " + experts[e] +
                 ") is not a term of the weight scale");
      }
      weights[*c][e] = *idx;
    }
    have_weight_row[*c] = true;
  }
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (!have_weight_row[c]) {
      fail(weights_raw.header_line, 1, "weights",
           "missing weights for " + criteria[c]);
    }
  }

  if (!ratings_raw.present) {
    fail(1, 1, "ratings", "missing [ratings] section");
  }
  std::vector<std::vector<std::vector<std::size_t>>> ratings(
      criteria.size(), std::vector<std::vector<std::size_t>>(
                           candidates.size(), std::vector<std::size_t>(experts.size())));
  std::vector<std::vector<bool>> have_rating(
      criteria.size(), std::vector<bool>(candidates.size(), false));
  for (const auto& row : ratings_raw.rows) {
    const auto c = index_in(criteria, row.keys[0]);
    if (!c) {
      fail(row.line, 1, "ratings", "unknown criterion \"" + row.keys[0] + "\"");
    }
    const auto a = index_in(candidates, row.keys[1]);
    if (!a) {
      fail(row.line, 1, "ratings", "unknown candidate \"" + row.keys[1] + "\"");
    }
    if (have_rating[*c][*a]) {
      fail(row.line, 1, "ratings",
           "duplicate ratings for (" + row.keys[0] + ", " + row.keys[1] + ")");
    }
    if (row.values.size() != experts.size()) {
      fail(row.line, 1, "ratings",
           "expected " + std::to_string(experts.size()) + " rating labels for (" +
               row.keys[0] + ", " + row.keys[1] + "), got " +
               std::to_string(row.values.size()));
    }
    for (std::size_t e = 0; e < experts.size(); ++e) {
      const auto idx = rating_scale.index_of(row.values[e].text);
      if (!idx) {
        fail(row.line, row.values[e].column, "ratings",
             "rating label \"" + std::string(row.values[e].text) + "\" for (" +
                 row.keys[0] + ", " + row.keys[1] + ", " + experts[e] +
                 ") is not a term of the rating scale");
      }
      ratings[*c][*a][e] = *idx;
    }
    have_rating[*c][*a] = true;
  }
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!have_rating[c][a]) {
        fail(ratings_raw.header_line, 1, "ratings",
             "missing rating for (" + criteria[c] + ", " + candidates[a] + ")");
      }
    }
  }

  FileOptions options;
  if (options_raw.msd_threshold) {
    const auto& [label, line] = *options_raw.msd_threshold;
    if (!rating_scale.index_of(label)) {
      fail(line, 1, "options",
           "msd-threshold \"" + label + "\" is not a term of the rating scale");
    }
    options.msd_threshold = label;
  }
  if (options_raw.epsilon_override) {
    options.epsilon_override = options_raw.epsilon_override->first;
  }
  if (options_raw.precision) {
    options.precision = options_raw.precision->first;
  }

  DecisionProblem problem{std::move(candidates), std::move(criteria),
                          std::move(experts),    std::move(weight_scale),
                          std::move(rating_scale), std::move(weights),
                          std::move(ratings)};
  return {std::move(problem), std::move(options)};
}

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

void require_token(const std::string& label, const char* what) {
  if (!valid_token(label)) {
    throw std::invalid_argument(std::string(what) + " label \"" + label +
                                "\" is not representable in a problem file");
  }
}

void render_scale(std::ostringstream& out, std::string_view name,
                  const LinguisticScale& scale) {
  out << "[" << name << "]\n";
  out << "universe = " << shortest(scale.universe().lo) << " "
      << shortest(scale.universe().hi) << "\n";
  for (const auto& t : scale.terms()) {
    require_token(t.label, "term");
    out << t.label << " = (" << shortest(t.shape.a()) << ", "
        << shortest(t.shape.b()) << ", " << shortest(t.shape.c()) << ")\n";
  }
  out << "\n";
}

}  // namespace

std::string render_problem(const DecisionProblem& p, const FileOptions& options) {
  std::ostringstream out;
  render_scale(out, "weight-scale", p.weight_scale());
  render_scale(out, "rating-scale", p.rating_scale());

  auto render_list = [&](std::string_view name, std::span<const std::string> items,
                         const char* what) {
    out << "[" << name << "]\n";
    for (const auto& item : items) {
      require_token(item, what);
      out << item << "\n";
    }
    out << "\n";
  };
  render_list("experts", p.experts(), "expert");
  render_list("criteria", p.criteria(), "criterion");
  render_list("candidates", p.candidates(), "candidate");

  out << "[weights]\n";
  for (std::size_t c = 0; c < p.criteria().size(); ++c) {
    out << p.criteria()[c] << " =";
    for (std::size_t e = 0; e < p.experts().size(); ++e) {
      out << " " << p.weight_label(c, e);
    }
    out << "\n";
  }
  out << "\n[ratings]\n";
  for (std::size_t c = 0; c < p.criteria().size(); ++c) {
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      out << p.criteria()[c] << " " << p.candidates()[a] << " =";
      for (std::size_t e = 0; e < p.experts().size(); ++e) {
        out << " " << p.rating_label(c, a, e);
      }
      out << "\n";
    }
  }

  out << "\n[options]\n";
  if (options.msd_threshold) {
    out << "msd-threshold = " << *options.msd_threshold << "\n";
  }
  if (options.epsilon_override) {
    out << "epsilon-override = " << shortest(*options.epsilon_override) << "\n";
  }
  out << "precision = " << options.precision << "\n";
  return std::move(out).str();
}

}  // namespace dnt
