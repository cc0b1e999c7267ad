#include "feasflow/errors.hpp"

namespace feasflow {

ImportImbalance::ImportImbalance(Units residual_)
    : Error("imports must sum to zero, residual is " + std::to_string(residual_)),
      residual(residual_) {}

NotStronglyConnected::NotStronglyConnected()
    : Error("network is not strongly connected") {}

CapacityTooSmall::CapacityTooSmall(std::size_t arc_, Units capacity_, Units required_)
    : Error("arc " + std::to_string(arc_ + 1) + " has capacity " +
            std::to_string(capacity_) + ", need at least " + std::to_string(required_)),
      arc(arc_),
      capacity(capacity_),
      required(required_) {}

LengthMismatch::LengthMismatch(std::size_t flow_size, std::size_t arc_count)
    : Error("flow has " + std::to_string(flow_size) + " values for " +
            std::to_string(arc_count) + " arcs") {}

NegativeDemandAtProcessing::NegativeDemandAtProcessing(Vertex vertex_, Units demand_)
    : Error("net demand " + std::to_string(demand_) + " at vertex " +
            std::to_string(vertex_) + " is negative at processing time"),
      vertex(vertex_),
      demand(demand_) {}

SyntaxError::SyntaxError(std::size_t line_, const std::string& reason)
    : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}

DuplicateImport::DuplicateImport(std::size_t line_, Vertex vertex_)
    : Error("line " + std::to_string(line_) + ": duplicate import for vertex " +
            std::to_string(vertex_)),
      line(line_),
      vertex(vertex_) {}

}  // namespace feasflow
