#pragma once

#include "k3fix4/verify.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace k3fix4 {

enum class Format { Markdown, Csv, Json };

Format parse_format(std::string_view s); // "md" "csv" "json"; throws Error otherwise

struct RenderOptions {
    Format format = Format::Markdown;
    bool ascii = false;

    // Unicode symbols only in markdown without --ascii; csv and json always carry ascii names.
    bool unicode() const { return format == Format::Markdown && !ascii; }
};

using Cell = std::variant<std::nullptr_t, bool, long, std::string, std::vector<std::string>>;

struct TextTable {
    std::string id;
    std::string title;
    std::vector<std::string> columns; // json keys and csv header
    std::vector<std::string> headers; // markdown header; defaults to columns
    std::vector<std::vector<Cell>> rows;
};

std::string render(const TextTable& t, const RenderOptions& o);
std::string render_kv(const std::string& id, const std::vector<std::pair<std::string, Cell>>& kv,
                      const RenderOptions& o);

std::string pretty_lattice(const std::string& ascii_name, bool unicode);
std::string pretty_fiber(const std::string& ascii_name, bool unicode);

// Enumerated rows of t1 t2 t3 t5 t6 t7 prop2 thm81 c1 in printed order.
std::string render_table(const std::string& id, const RenderOptions& o);
// Rows with their constraint traces, then the excluded channel with citations.
std::string render_enumeration(const std::string& id, const RenderOptions& o);
std::string render_lattice_invariants(std::string_view expr, const RenderOptions& o);
std::string render_audit(const std::string& what, const RenderOptions& o); // table4 discriminant isometry
std::string render_verify(const VerifyReport& r);

} // namespace k3fix4
