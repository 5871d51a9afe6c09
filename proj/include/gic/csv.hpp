#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gic::csv {

/// Fixed 6-decimal rendering used by every CSV emitter.
std::string fixed6(double value);

/// Quotes a cell when it contains a comma, quote or line break.
std::string escape(std::string_view cell);

/// Splits one CSV line into cells, honouring double-quoted cells.
std::vector<std::string> split_line(std::string_view line);

}  // namespace gic::csv
