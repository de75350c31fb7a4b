#include "nervecheck/cox_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nervecheck {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

[[noreturn]] void syntax_error(const std::string& source, int line, int column,
                               const std::string& message) {
  throw Error(Errc::SyntaxError, source + ":" + std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + message);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Label parse_label_token(const Token& t, const std::string& source) {
  if (t.text == "inf") return Label::inf();
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      syntax_error(source, t.line, t.column,
                   "'" + t.text + "' is not a label (decimal integer or inf)");
  if (t.text.size() > 9)
    syntax_error(source, t.line, t.column, "label '" + t.text + "' too large");
  const int value = std::stoi(t.text);
  if (value < 1)
    syntax_error(source, t.line, t.column,
                 "'" + t.text + "' is not a legal label token");
  return Label::finite(value);
}

}  // namespace

InputDocument parse_cox(const std::string& text, const std::string& source) {
  std::optional<std::string> doc_name, expected;
  std::optional<std::vector<std::string>> names;
  std::vector<std::vector<Token>> rows;
  std::optional<int> rank;
  int rank_line = 0;

  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const std::string line = trim(raw_line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("expect:", 0) == 0) expected = trim(body.substr(7));
      if (body.rfind("name:", 0) == 0) doc_name = trim(body.substr(5));
      continue;
    }

    // Tokenize with column positions from the untrimmed line.
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw_line.size();) {
      if (std::isspace(static_cast<unsigned char>(raw_line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw_line.size() &&
             !std::isspace(static_cast<unsigned char>(raw_line[j])))
        ++j;
      tokens.push_back(
          {raw_line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (tokens.empty()) continue;

    if (!rank && tokens[0].text == "names:") {
      if (names)
        syntax_error(source, line_no, tokens[0].column,
                     "duplicate names: line");
      names.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i)
        names->push_back(tokens[i].text);
      if (names->empty())
        syntax_error(source, line_no, tokens[0].column, "names: line is empty");
      continue;
    }
    if (!rank) {
      if (tokens.size() != 1)
        syntax_error(source, line_no, tokens[0].column,
                     "expected the rank on a line of its own");
      for (char c : tokens[0].text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          syntax_error(source, line_no, tokens[0].column,
                       "'" + tokens[0].text + "' is not a rank");
      rank = std::stoi(tokens[0].text);
      rank_line = line_no;
      if (*rank < 1 || *rank > kHardRankLimit)
        syntax_error(source, line_no, tokens[0].column,
                     "rank must be between 1 and " +
                         std::to_string(kHardRankLimit));
      continue;
    }
    if (static_cast<int>(rows.size()) == *rank)
      syntax_error(source, line_no, tokens[0].column,
                   "extra content after the matrix");
    if (static_cast<int>(tokens.size()) != *rank)
      syntax_error(source, line_no, tokens[0].column,
                   "expected " + std::to_string(*rank) + " entries, found " +
                       std::to_string(tokens.size()));
    rows.push_back(std::move(tokens));
  }

  if (!rank) syntax_error(source, line_no + 1, 1, "missing rank line");
  if (static_cast<int>(rows.size()) != *rank)
    syntax_error(source, line_no + 1, 1,
                 "expected " + std::to_string(*rank) + " matrix rows, found " +
                     std::to_string(rows.size()));
  if (names && static_cast<int>(names->size()) != *rank)
    syntax_error(source, rank_line, 1,
                 "names: line has " + std::to_string(names->size()) +
                     " entries for rank " + std::to_string(*rank));

  // Entry-precise checks before handing over to the validator.
  std::vector<std::vector<Label>> raw;
  for (const auto& row : rows) {
    std::vector<Label> labels;
    for (const Token& t : row) labels.push_back(parse_label_token(t, source));
    raw.push_back(std::move(labels));
  }
  for (int i = 0; i < *rank; ++i) {
    if (raw[i][i] != Label::finite(1))
      syntax_error(source, rows[i][i].line, rows[i][i].column,
                   "diagonal entry must be 1");
    for (int j = 0; j < *rank; ++j) {
      if (i != j && raw[i][j] == Label::finite(1))
        syntax_error(source, rows[i][j].line, rows[i][j].column,
                     "label 1 is only legal on the diagonal");
      if (raw[i][j] != raw[j][i])
        syntax_error(source, rows[i][j].line, rows[i][j].column,
                     "matrix is not symmetric");
    }
  }

  InputDocument doc;
  doc.source = source;
  try {
    doc.matrix = validate_matrix(raw, names);
  } catch (const Error& e) {
    throw Error(e.code(),
                source + ":" + std::to_string(rank_line) + ": " + e.what());
  }
  doc.name = doc_name;
  doc.expected_class = expected;
  return doc;
}

InputDocument load_cox_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::SyntaxError, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cox(buffer.str(), path);
}

std::string serialize_cox(const CoxeterMatrix& m,
                          const std::optional<std::string>& name,
                          const std::optional<std::string>& expected_class) {
  std::ostringstream out;
  if (name) out << "# name: " << *name << "\n";
  if (expected_class) out << "# expect: " << *expected_class << "\n";
  out << "names:";
  for (const auto& g : m.generators()) out << " " << g;
  out << "\n" << m.rank() << "\n";
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = 0; j < m.rank(); ++j)
      out << (j ? " " : "") << m.label(i, j).str();
    out << "\n";
  }
  return out.str();
}

}  // namespace nervecheck
