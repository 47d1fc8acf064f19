#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hcproj {

/// Input text could not be parsed; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("parse error line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A bipartite vertex exceeds degree 2, so the path/cycle decomposition is undefined.
class DegreeTooHighError : public std::runtime_error {
public:
    DegreeTooHighError(int vertex, int degree)
        : std::runtime_error("vertex " + std::to_string(vertex) + " has degree " +
                             std::to_string(degree) + " > 2"),
          vertex_(vertex), degree_(degree) {}
    int vertex() const { return vertex_; }
    int degree() const { return degree_; }

private:
    int vertex_;
    int degree_;
};

/// No perfect matching exists; carries one odd path component as the witness.
class NoPerfectMatchingError : public std::runtime_error {
public:
    explicit NoPerfectMatchingError(std::vector<int> odd_path_vertices)
        : std::runtime_error("no perfect matching: odd path component of " +
                             std::to_string(odd_path_vertices.size()) + " vertices"),
          odd_path_(std::move(odd_path_vertices)) {}
    const std::vector<int>& odd_path_vertices() const { return odd_path_; }

private:
    std::vector<int> odd_path_;
};

/// The supplied matching leaves a vertex exposed where a perfect one was required.
class NotPerfectError : public std::runtime_error {
public:
    explicit NotPerfectError(int exposed_vertex)
        : std::runtime_error("matching is not perfect: vertex " +
                             std::to_string(exposed_vertex) + " is exposed"),
          exposed_(exposed_vertex) {}
    int exposed_vertex() const { return exposed_; }

private:
    int exposed_;
};

/// Instance exceeds a brute-force size guard.
class TooLargeError : public std::runtime_error {
public:
    TooLargeError(int n, int guard)
        : std::runtime_error("instance with n=" + std::to_string(n) +
                             " exceeds guard n<=" + std::to_string(guard)) {}
};

/// Random generation could not satisfy the requested spec within its retry budget.
class UnsatisfiableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Code enumeration hit its cap with codes still unvisited.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(unsigned long long cap)
        : std::runtime_error("code cap " + std::to_string(cap) +
                             " exceeded with codes remaining") {}
};

/// Mapping a cycle of the split graph back to the original failed verification.
class NotHamiltonianAfterUnsplitError : public std::runtime_error {
public:
    explicit NotHamiltonianAfterUnsplitError(std::vector<int> arcs)
        : std::runtime_error("unsplit arc set is not a Hamiltonian cycle"),
          arcs_(std::move(arcs)) {}
    const std::vector<int>& arcs() const { return arcs_; }

private:
    std::vector<int> arcs_;
};

class BudgetTooSmallError : public std::runtime_error {
public:
    BudgetTooSmallError() : std::runtime_error("audit budget must be at least 1 trial") {}
};

class SizeOutOfGuardError : public std::runtime_error {
public:
    SizeOutOfGuardError(int size, int guard)
        : std::runtime_error("size " + std::to_string(size) +
                             " exceeds the oracle guard n<=" + std::to_string(guard)) {}
};

} // namespace hcproj
