#include "mutpot/seed_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mutpot/expression.hpp"

namespace mutpot {

SeedFileError::SeedFileError(const std::string& message, std::size_t line)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

VSeed SeedDocument::vseed() const {
    return {form, collection,
            potential ? *potential : BinomialRationalFn(LaurentPoly(rank))};
}

bool operator==(const SeedDocument& a, const SeedDocument& b) {
    return a.comments == b.comments && a.name == b.name && a.comment == b.comment && a.rank == b.rank &&
           a.form == b.form && a.form_shorthand == b.form_shorthand && a.collection == b.collection &&
           a.potential == b.potential;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

class Cursor {
public:
    Cursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Coord integer() {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) fail("expected integer");
        try {
            return std::stoll(std::string(s_.substr(start, i_ - start)));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }
    std::vector<Coord> tuple(char open, char close) {
        expect(open);
        std::vector<Coord> out{integer()};
        while (accept(',')) out.push_back(integer());
        expect(close);
        return out;
    }
    void finish() {
        skip();
        if (i_ != s_.size()) fail("trailing characters '" + std::string(s_.substr(i_)) + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw SeedFileError(msg, line_); }

private:
    std::string_view s_;
    std::size_t line_;
    std::size_t i_ = 0;
};

}  // namespace

SeedDocument parse_seed(std::string_view text) {
    SeedDocument doc;
    bool have_rank = false, have_form = false;
    std::optional<std::pair<std::string, std::size_t>> potential_text;
    std::vector<std::pair<std::vector<Coord>, std::pair<int, std::size_t>>> vectors;
    std::optional<IntMatrix> full_form;
    std::optional<Coord> short_form;
    std::size_t form_line = 0;

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::string_view line = trim(raw);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (line.front() == '#') {
            doc.comments.emplace_back(line.substr(1));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw SeedFileError("expected 'key = value'", lineno);
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        auto once = [&](bool& seen) {
            if (seen) throw SeedFileError("duplicate key '" + key + "'", lineno);
            seen = true;
        };
        if (key == "name") {
            if (doc.name) throw SeedFileError("duplicate key 'name'", lineno);
            doc.name = std::string(value);
        } else if (key == "comment") {
            if (doc.comment) throw SeedFileError("duplicate key 'comment'", lineno);
            doc.comment = std::string(value);
        } else if (key == "rank") {
            once(have_rank);
            Cursor c(value, lineno);
            Coord r = c.integer();
            c.finish();
            if (r < 1) throw SeedFileError("rank must be positive", lineno);
            doc.rank = static_cast<std::size_t>(r);
        } else if (key == "form") {
            once(have_form);
            form_line = lineno;
            Cursor c(value, lineno);
            if (c.accept('k')) {
                short_form = c.integer();
            } else {
                c.expect('[');
                std::vector<std::vector<Coord>> rows{c.tuple('[', ']')};
                while (c.accept(',')) rows.push_back(c.tuple('[', ']'));
                c.expect(']');
                try {
                    full_form = IntMatrix::from_rows(rows);
                } catch (const std::exception& e) {
                    throw SeedFileError(e.what(), lineno);
                }
            }
            c.finish();
        } else if (key == "vector") {
            Cursor c(value, lineno);
            std::vector<Coord> v = c.tuple('(', ')');
            int m = 1;
            if (c.accept('x')) {
                Coord mm = c.integer();
                if (mm < 1 || mm > 1000) throw SeedFileError("multiplicity must be in 1..1000", lineno);
                m = static_cast<int>(mm);
            }
            c.finish();
            vectors.push_back({std::move(v), {m, lineno}});
        } else if (key == "potential") {
            if (potential_text) throw SeedFileError("duplicate key 'potential'", lineno);
            potential_text = {std::string(value), lineno};
        } else {
            throw SeedFileError("unknown key '" + key + "'", lineno);
        }
    }

    if (!have_form) throw SeedFileError("missing 'form'", 0);
    if (short_form) {
        if (doc.rank != 2) throw SeedFileError("'form = k <int>' requires rank 2", form_line);
        doc.form = SkewForm::rank2(*short_form);
        doc.form_shorthand = true;
    } else {
        if (full_form->rows() != doc.rank || full_form->cols() != doc.rank) {
            throw SeedFileError("form must be " + std::to_string(doc.rank) + "x" + std::to_string(doc.rank),
                                form_line);
        }
        try {
            doc.form = SkewForm(*full_form);
        } catch (const std::exception& e) {
            throw SeedFileError(e.what(), form_line);
        }
        doc.form_shorthand = false;
    }
    doc.collection = ExchangeCollection(doc.rank);
    for (const auto& [v, info] : vectors) {
        if (v.size() != doc.rank) {
            throw SeedFileError("vector has " + std::to_string(v.size()) + " coordinates, rank is " +
                                    std::to_string(doc.rank),
                                info.second);
        }
        doc.collection.add(LatticeVector(v), info.first);
    }
    if (potential_text) {
        try {
            doc.potential = parse_function(potential_text->first, doc.rank);
        } catch (const ParseError& e) {
            throw SeedFileError(std::string("potential: ") + e.what(), potential_text->second);
        }
    }
    return doc;
}

SeedDocument load_seed(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SeedFileError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_seed(buf.str());
}

std::string render_seed(const SeedDocument& doc) {
    std::string out;
    for (const auto& c : doc.comments) out += "#" + c + "\n";
    if (doc.name) out += "name = " + *doc.name + "\n";
    if (doc.comment) out += "comment = " + *doc.comment + "\n";
    out += "rank = " + std::to_string(doc.rank) + "\n";
    if (doc.form_shorthand && doc.rank == 2) {
        out += "form = k " + std::to_string(doc.form.rank2_k()) + "\n";
    } else {
        out += "form = " + doc.form.str() + "\n";
    }
    for (const auto& [v, m] : doc.collection.multiplicities()) {
        out += "vector = " + v.str() + " x " + std::to_string(m) + "\n";
    }
    if (doc.potential) out += "potential = " + doc.potential->normalized().str() + "\n";
    return out;
}

}  // namespace mutpot
