// The .cox file format: comment lines, an optional names: line, the rank,
// then the label rows. Metadata for corpus files travels in comments of
// the form "# expect: Menger" / "# name: pentagon".
#pragma once

#include <optional>
#include <string>

#include "nervecheck/coxeter.hpp"

namespace nervecheck {

struct InputDocument {
  std::string source;  // path or "<string>"
  CoxeterMatrix matrix;
  std::optional<std::string> name;
  std::optional<std::string> expected_class;
};

// Throws SyntaxError with "source:line:column" attribution, and forwards
// matrix validation errors with the offending line attached.
InputDocument parse_cox(const std::string& text,
                        const std::string& source = "<string>");

InputDocument load_cox_file(const std::string& path);

// Canonical form: metadata comments, names: line, rank, rows.
// serialize(parse(text)) is idempotent.
std::string serialize_cox(const CoxeterMatrix& m,
                          const std::optional<std::string>& name = std::nullopt,
                          const std::optional<std::string>& expected_class =
                              std::nullopt);

}  // namespace nervecheck
