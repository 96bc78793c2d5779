#include "streamaccel/sequences.hpp"

#include <fstream>

namespace streamaccel {

namespace {

// Symmetric convolution sum_{k=0..n} x_k x_{n-k} over an all-defined prefix.
Scalar self_convolution(std::span<const Element> x, std::size_t n)
{
    mpz_class sum = 0;
    for (std::size_t k = 0; k <= n; ++k)
        sum += x[k].value().raw().get_num() * x[n - k].value().raw().get_num();
    return Scalar::from_integer(sum);
}

}  // namespace

NumStream catalan_stream()
{
    return NumStream::unfold(Extent::infinite(), [](std::size_t n, std::span<const Element> prefix) {
        if (n == 0)
            return Element(1);
        return Element(self_convolution(prefix, n - 1));
    });
}

NumStream plain_lambda_terms_stream()
{
    return NumStream::unfold(Extent::infinite(), [](std::size_t m, std::span<const Element> prefix) {
        if (m < 2)
            return Element(0);
        const std::size_t n = m - 2;
        return Element(Scalar(1) + prefix[n].value() + self_convolution(prefix, n));
    });
}

NumStream grandi_terms()
{
    return NumStream::generate(Extent::infinite(), [](std::size_t j) { return Element(j % 2 == 0 ? 1 : -1); },
                               Memo::None);
}

NumStream alternating_naturals_terms()
{
    return NumStream::generate(
        Extent::infinite(),
        [](std::size_t j) {
            const auto v = static_cast<long>(j);
            return Element(j % 2 == 0 ? -v : v);
        },
        Memo::None);
}

NumStream leibniz_pi4_terms()
{
    return NumStream::generate(
        Extent::infinite(),
        [](std::size_t j) {
            const auto den = 2 * static_cast<long>(j) + 1;
            return Element(Scalar(j % 2 == 0 ? 1 : -1, den));
        },
        Memo::None);
}

const std::vector<std::string_view>& builtin_names()
{
    static const std::vector<std::string_view> names = {
        "catalan", "plain-lambda", "grandi-terms", "alt-naturals", "leibniz-pi4-terms",
    };
    return names;
}

NumStream builtin(std::string_view name)
{
    if (name == "catalan")
        return catalan_stream();
    if (name == "plain-lambda")
        return plain_lambda_terms_stream();
    if (name == "grandi-terms")
        return grandi_terms();
    if (name == "alt-naturals")
        return alternating_naturals_terms();
    if (name == "leibniz-pi4-terms")
        return leibniz_pi4_terms();
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

ParseError::ParseError(std::string source, std::size_t line, std::string token)
    : std::runtime_error(source + ":" + std::to_string(line) + ": cannot parse '" + token + "' as a number"),
      source_(std::move(source)), line_(line), token_(std::move(token))
{
}

NumStream parse_sequence(std::istream& in, const std::string& source_name)
{
    constexpr std::string_view blanks = " \t\r\f\v";
    std::vector<Element> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text(line);
        if (auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        const auto first = text.find_first_not_of(blanks);
        if (first == std::string_view::npos)
            continue;
        text = text.substr(first, text.find_last_not_of(blanks) - first + 1);
        auto value = parse_scalar(text);
        if (!value)
            throw ParseError(source_name, line_no, std::string(text));
        values.emplace_back(std::move(*value));
    }
    return NumStream::from_values(std::move(values));
}

NumStream load_sequence(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_sequence(in, path.string());
}

std::string SequenceSource::description() const
{
    if (auto b = std::get_if<BuiltinSource>(&where))
        return "builtin:" + b->name;
    return "file:" + std::get<FileSource>(where).path.string();
}

NumStream SequenceSource::open() const
{
    if (auto b = std::get_if<BuiltinSource>(&where))
        return streamaccel::builtin(b->name);
    return load_sequence(std::get<FileSource>(where).path);
}

}  // namespace streamaccel
