// Built-in integer and series-term generators, and the sequence file loader.

#ifndef STREAMACCEL_SEQUENCES_HPP
#define STREAMACCEL_SEQUENCES_HPP

#include "streamaccel/stream.hpp"

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace streamaccel {

/// Catalan numbers 1, 1, 2, 5, 14, ... by the convolution recurrence.
NumStream catalan_stream();

/// Plain lambda terms by size (OEIS A114851):
/// S_0 = S_1 = 0, S_{n+2} = 1 + S_n + sum_{k=0..n} S_k S_{n-k}.
NumStream plain_lambda_terms_stream();

/// 1, -1, 1, -1, ...
NumStream grandi_terms();

/// 0, 1, -2, 3, -4, ...: term j is (-1)^(j+1) j.
NumStream alternating_naturals_terms();

/// (-1)^j / (2j + 1), whose series sums to pi/4.
NumStream leibniz_pi4_terms();

/// Registry names, in a fixed order.
const std::vector<std::string_view>& builtin_names();

/// Throws std::invalid_argument for a name outside the registry.
NumStream builtin(std::string_view name);

class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, std::string token);

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    const std::string& token() const { return token_; }

private:
    std::string source_;
    std::size_t line_;
    std::string token_;
};

/// One value per line: an integer, "p/q", or a plain decimal, each with an
/// optional sign. '#' starts a comment; blank lines are skipped.
NumStream parse_sequence(std::istream& in, const std::string& source_name = "<stream>");

/// File flavour of parse_sequence; throws std::runtime_error if unreadable.
NumStream load_sequence(const std::filesystem::path& path);

struct BuiltinSource {
    std::string name;
};

struct FileSource {
    std::filesystem::path path;
};

struct SequenceSource {
    std::variant<BuiltinSource, FileSource> where;

    static SequenceSource builtin(std::string name) { return {BuiltinSource{std::move(name)}}; }
    static SequenceSource file(std::filesystem::path p) { return {FileSource{std::move(p)}}; }

    std::string description() const;
    NumStream open() const;
};

}  // namespace streamaccel

#endif  // STREAMACCEL_SEQUENCES_HPP
