#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (poles of Gamma, excluded parameters, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Requested order exceeds what the implementation supports.
class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

// Value requested outside the regime where the chosen formula is valid.
class RangeError : public Error {
public:
    using Error::Error;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class AccuracyError : public Error {
public:
    using Error::Error;
};

class RefinementError : public Error {
public:
    using Error::Error;
};

// Evaluation hit a pole; carries the location and residue of the zeta function there.
class PoleError : public DomainError {
public:
    PoleError(const std::string& what, double location, std::complex<double> residue)
        : DomainError(what), location_(location), residue_(residue) {}
    double location() const { return location_; }
    std::complex<double> residue() const { return residue_; }

private:
    double location_;
    std::complex<double> residue_;
};

}  // namespace zk
