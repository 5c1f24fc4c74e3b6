#pragma once

#include <stdexcept>
#include <string>

namespace hosoya {

// Every failure mode the library reports. CLI code maps these to exit codes.
enum class Errc {
    loop_edge,
    vertex_out_of_range,
    duplicate_edge,
    edge_not_present,
    not_unicyclic,
    not_a_forest,
    not_a_tree,
    too_large,
    domain_error,
    invalid_parameters,
    no_closed_form,
    chain_violation,
    malformed_triple,
    out_of_range,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hosoya
