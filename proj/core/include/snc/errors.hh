#ifndef SNC_GUARD_SNC_ERRORS_HH
#define SNC_GUARD_SNC_ERRORS_HH 1

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace snc
{
    enum class ErrorKind
    {
        loop_edge,
        digon_pair,
        duplicate_edge,
        vertex_out_of_range,
        empty_vertex_set,
        non_positive_k,
        empty_subset,
        no_such_edge,
        would_be_empty,
        condition_out_of_range,
        ceiling_exceeded,
        invalid_probability,
        retries_exhausted,
        invalid_spec,
        syntax_error,
        count_mismatch
    };

    auto to_string(ErrorKind kind) -> std::string;

    /// Base of every error thrown by the library. The kind is stable and can be
    /// matched on; the message is for humans.
    class Error : public std::runtime_error
    {
    private:
        ErrorKind _kind;

    public:
        Error(ErrorKind kind, const std::string & message);

        auto kind() const noexcept -> ErrorKind { return _kind; }
    };

    /// Raised by graph construction and derivation. first/second name the
    /// offending vertex or edge endpoints where that makes sense.
    class GraphError : public Error
    {
    private:
        std::size_t _first, _second;

    public:
        GraphError(ErrorKind kind, const std::string & message, std::size_t first = 0, std::size_t second = 0);

        auto first() const noexcept -> std::size_t { return _first; }
        auto second() const noexcept -> std::size_t { return _second; }
    };

    /// Raised while reading a graph text document. Lines are 1-based.
    class ParseError : public Error
    {
    private:
        std::size_t _line;
        std::size_t _declared = 0, _actual = 0;

    public:
        ParseError(ErrorKind kind, std::size_t line, const std::string & detail);
        ParseError(std::size_t line, std::size_t declared, std::size_t actual);

        auto line() const noexcept -> std::size_t { return _line; }
        auto declared() const noexcept -> std::size_t { return _declared; }
        auto actual() const noexcept -> std::size_t { return _actual; }
    };

    class RetriesExhausted : public Error
    {
    private:
        std::uint64_t _attempts;

    public:
        explicit RetriesExhausted(std::uint64_t attempts);

        auto attempts() const noexcept -> std::uint64_t { return _attempts; }
    };
}

#endif
