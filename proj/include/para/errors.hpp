#pragma once

#include <stdexcept>
#include <string>

namespace para {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Bad usage of an operation: argument out of the documented range,
/// odd size where an even one is required, identically-zero input where
/// a nonzero one is needed, and so on.
struct DomainError : Error {
    explicit DomainError(const std::string &msg) : Error(msg) {}
};

/// Malformed input data: unreadable file, wrong JSON shape, unknown
/// schema version, unparsable rational string.
struct SchemaError : Error {
    explicit SchemaError(const std::string &msg) : Error(msg) {}
};

/// A structural axiom of a model failed to hold (square-zero action,
/// exactness of a modeled sequence, commutativity of a product, ...).
/// `where` names the axiom that broke.
struct AxiomViolation : Error {
    std::string where;
    AxiomViolation(std::string where_, const std::string &msg)
        : Error(where_ + ": " + msg), where(std::move(where_)) {}
};

/// An order-by-order lift stopped: the obstruction class at `order`
/// does not vanish (or the correction equation at that order is
/// unsolvable).  This is a finding about the model, not a crash.
struct ObstructionError : Error {
    int order;
    ObstructionError(int order_, const std::string &msg)
        : Error("order " + std::to_string(order_) + ": " + msg),
          order(order_) {}
};

/// A first-order deformation in the requested direction does not exist.
struct NoFirstOrderDeformation : Error {
    explicit NoFirstOrderDeformation(const std::string &msg) : Error(msg) {}
};

}  // namespace para
