#pragma once

// Text seed documents:
//
//   # free-form comment lines
//   name = opposite-pair-k1
//   comment = one line of description
//   rank = 2
//   form = k 1                      (or form = [[0,1],[-1,0]])
//   vector = (0,1) x 1              (repeated, any order)
//   potential = x1 + 1/x2           (optional)

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mutpot/mutation.hpp"

namespace mutpot {

class SeedFileError : public std::invalid_argument {
public:
    SeedFileError(const std::string& message, std::size_t line);
    /// One-based line number, 0 when the error is not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct SeedDocument {
    std::vector<std::string> comments;  // text after '#', verbatim
    std::optional<std::string> name;
    std::optional<std::string> comment;
    std::size_t rank = 2;
    SkewForm form = SkewForm::rank2(1);
    bool form_shorthand = true;  // render rank-two forms as "k <int>"
    ExchangeCollection collection{2};
    std::optional<BinomialRationalFn> potential;

    VSeed vseed() const;
    CSeed cseed() const { return CSeed::base(form, collection); }

    friend bool operator==(const SeedDocument& a, const SeedDocument& b);
};

SeedDocument parse_seed(std::string_view text);
SeedDocument load_seed(const std::string& path);
/// Canonical text: comments, name, comment, rank, form, sorted vectors, potential.
std::string render_seed(const SeedDocument& doc);

}  // namespace mutpot
