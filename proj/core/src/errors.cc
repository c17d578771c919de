#include <snc/errors.hh>

using std::string;

namespace snc
{
    using std::to_string;

    auto to_string(ErrorKind kind) -> string
    {
        switch (kind) {
        case ErrorKind::loop_edge: return "LoopEdge";
        case ErrorKind::digon_pair: return "DigonPair";
        case ErrorKind::duplicate_edge: return "DuplicateEdge";
        case ErrorKind::vertex_out_of_range: return "VertexOutOfRange";
        case ErrorKind::empty_vertex_set: return "EmptyVertexSet";
        case ErrorKind::non_positive_k: return "NonPositiveK";
        case ErrorKind::empty_subset: return "EmptySubset";
        case ErrorKind::no_such_edge: return "NoSuchEdge";
        case ErrorKind::would_be_empty: return "WouldBeEmpty";
        case ErrorKind::condition_out_of_range: return "ConditionOutOfRange";
        case ErrorKind::ceiling_exceeded: return "CeilingExceeded";
        case ErrorKind::invalid_probability: return "InvalidProbability";
        case ErrorKind::retries_exhausted: return "RetriesExhausted";
        case ErrorKind::invalid_spec: return "InvalidSpec";
        case ErrorKind::syntax_error: return "SyntaxError";
        case ErrorKind::count_mismatch: return "CountMismatch";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const string & message) :
        std::runtime_error(to_string(kind) + ": " + message),
        _kind(kind)
    {
    }

    GraphError::GraphError(ErrorKind kind, const string & message, std::size_t first, std::size_t second) :
        Error(kind, message),
        _first(first),
        _second(second)
    {
    }

    ParseError::ParseError(ErrorKind kind, std::size_t line, const string & detail) :
        Error(kind, "line " + to_string(line) + ": " + detail),
        _line(line)
    {
    }

    ParseError::ParseError(std::size_t line, std::size_t declared, std::size_t actual) :
        Error(ErrorKind::count_mismatch, "line " + to_string(line) + ": header declares " + to_string(declared) +
                " edges but " + to_string(actual) + " were given"),
        _line(line),
        _declared(declared),
        _actual(actual)
    {
    }

    RetriesExhausted::RetriesExhausted(std::uint64_t attempts) :
        Error(ErrorKind::retries_exhausted, "no acceptable sample after " + to_string(attempts) + " attempts"),
        _attempts(attempts)
    {
    }
}
