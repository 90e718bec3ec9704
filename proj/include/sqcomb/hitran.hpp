#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqcomb::hitran {

/// One line-by-line transition record, 2004-format fixed-width layout.
/// Only the fields feeding the line-shape model are retained.
struct SpectralLine {
    int molecule_id = 0;
    int isotopologue_id = 0;
    double nu0 = 0.0;        // line-center wavenumber [cm^-1]
    double intensity = 0.0;  // line intensity at 296 K [cm^-1/(molecule cm^-2)]
    double gamma_air = 0.0;  // air-broadened HWHM [cm^-1/atm]
    double gamma_self = 0.0; // self-broadened HWHM [cm^-1/atm]
    double e_lower = 0.0;    // lower-state energy [cm^-1]
    double n_air = 0.0;      // temperature exponent of gamma_air
    double delta_air = 0.0;  // air-induced pressure shift [cm^-1/atm]

    bool operator==(const SpectralLine&) const = default;
};

class ParseError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// Record of the wrong length; carries the observed byte count.
class FormatError : public ParseError {
 public:
    FormatError(const std::string& msg, std::size_t byte_count);
    std::size_t byte_count() const { return byte_count_; }

 private:
    std::size_t byte_count_;
};

// Unparseable or out-of-range field; carries the 1-based column span.
class FieldError : public ParseError {
 public:
    FieldError(const std::string& field, int col_begin, int col_end,
               const std::string& reason);
    int col_begin() const { return col_begin_; }
    int col_end() const { return col_end_; }

 private:
    int col_begin_;
    int col_end_;
};

inline constexpr std::size_t record_length = 160;

/// Parse one 160-character record (line terminator excluded).
SpectralLine parse_record(std::string_view record);

/// Serialize back into the fixed-width layout. Discarded columns
/// (Einstein A, quanta, codes) are emitted as placeholders.
std::string format_record(const SpectralLine& line);

/// Ordered collection of lines, sorted by nu0 ascending, no duplicate
/// (molecule, isotopologue, nu0, e_lower) tuples.
class LineList {
 public:
    LineList() = default;
    static LineList from_lines(std::vector<SpectralLine> lines);

    const std::vector<SpectralLine>& lines() const { return lines_; }
    bool empty() const { return lines_.empty(); }
    std::size_t size() const { return lines_.size(); }

 private:
    std::vector<SpectralLine> lines_;
};

/// All lines of the molecule with nu0 in [nu_min, nu_max], order kept.
LineList select_window(const LineList& list, double nu_min, double nu_max,
                       int molecule_id);

/// Load a .par file (one 160-character record per line, ASCII).
LineList load_par_file(const std::string& path);

}  // namespace sqcomb::hitran
