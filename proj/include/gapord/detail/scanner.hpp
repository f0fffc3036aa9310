#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gapord {

/// Syntax or validation error raised by the text front ends. The position is
/// a zero-based byte offset into the parsed input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at column " + std::to_string(position + 1) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    /// Decimal digits as written, without leading whitespace.
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    int small_natural() {
        std::size_t start = position();
        std::string d = digits();
        if (d.size() > 6)
            throw ParseError(start, "index too large: " + d);
        return std::stoi(d);
    }

    void finish() {
        if (!at_end())
            fail("unexpected trailing input");
    }

    std::size_t position() {
        skip_ws();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(position(), message); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail
} // namespace gapord
