#include "cgobstruct/knot_parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace cgo {

namespace {

class TermParser {
public:
    TermParser(std::string_view text, std::size_t term_index) : text_(text), term_(term_index) {}

    void parse_into(std::vector<Piece>& out)
    {
        Sign sign = Sign::positive;
        if (peek() == '-' || peek() == '+') {
            sign = text_[pos_] == '-' ? Sign::negative : Sign::positive;
            ++pos_;
        }
        if (consume("family(")) {
            auto args = integers(5);
            expect(')');
            finish();
            auto fam = build_family(args[0], args[1], args[2], args[3], args[4]);
            for (const auto& pc : fam.pieces()) out.push_back(sign == Sign::negative ? pc.mirrored() : pc);
            return;
        }
        if (!consume("T(")) fail("expected 'T(' or 'family('");
        auto first = integers(2);
        if (first[0] != 2) fail("only T(2,·) torus knots are supported");
        if (peek() == ';') {
            ++pos_;
            auto cable = integers(2);
            if (cable[0] != 2) fail("only (2,p)-cables are supported");
            expect(')');
            finish();
            out.push_back(Piece::make(first[1], cable[1], sign));
        } else {
            expect(')');
            finish();
            out.push_back(Piece::make(1, first[1], sign));
        }
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(std::string_view lit)
    {
        if (text_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void finish()
    {
        if (pos_ != text_.size()) fail("trailing characters");
    }

    std::vector<std::int64_t> integers(std::size_t count)
    {
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < count; ++i) {
            if (i > 0) expect(',');
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
            if (ec != std::errc()) fail("expected an integer");
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            out.push_back(v);
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("knot term " + std::to_string(term_ + 1) + " ('" + std::string(text_) + "'), offset " +
                         std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t term_;
    std::size_t pos_ = 0;
};

}  // namespace

GAKnot parse_knot(std::string_view text)
{
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw InputError("empty knot expression");

    std::vector<Piece> pieces;
    std::size_t start = 0;
    std::size_t index = 0;
    while (true) {
        auto hash = compact.find('#', start);
        std::string_view term(compact.data() + start, (hash == std::string::npos ? compact.size() : hash) - start);
        if (term.empty()) throw InputError("empty term " + std::to_string(index + 1) + " in knot expression");
        TermParser(term, index).parse_into(pieces);
        if (hash == std::string::npos) break;
        start = hash + 1;
        ++index;
    }
    return GAKnot(std::move(pieces));
}

std::string format_piece(const Piece& piece)
{
    std::string s = piece.sign == Sign::negative ? "-" : "";
    if (piece.is_torus()) return s + "T(2," + std::to_string(piece.cable_p) + ")";
    return s + "T(2," + std::to_string(piece.companion_q) + ";2," + std::to_string(piece.cable_p) + ")";
}

std::string format_knot(const GAKnot& knot)
{
    std::string out;
    for (std::size_t i = 0; i < knot.size(); ++i) {
        if (i > 0) out += " # ";
        out += format_piece(knot[i]);
    }
    return out;
}

}  // namespace cgo
