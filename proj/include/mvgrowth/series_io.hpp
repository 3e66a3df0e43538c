#ifndef MVGROWTH_SERIES_IO_HPP
#define MVGROWTH_SERIES_IO_HPP

#include <iosfwd>
#include <string>

#include "mvgrowth/power_series.hpp"

namespace mvg {

/// Coefficient file format: header line `dim m degree D`, then one term per
/// line `a_1 ... a_m re im`. `#` starts a comment. Round-trips bit-exactly.
void write_series(std::ostream& os, const PowerSeries& s);
PowerSeries read_series(std::istream& is);

void write_series_file(const std::string& path, const PowerSeries& s);
PowerSeries read_series_file(const std::string& path);

}  // namespace mvg

#endif
