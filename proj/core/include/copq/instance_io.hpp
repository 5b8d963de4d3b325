#ifndef COPQ_INSTANCE_IO_HPP
#define COPQ_INSTANCE_IO_HPP

#include <string>

#include "copq/instance.hpp"

namespace copq {

enum class InstanceFormat {
    matrix, ///< plain n + matrix rows (QAP: flow block, blank line, distance block)
    tsplib, ///< TSPLIB subset: EXPLICIT edge weights, FULL_MATRIX layout
    qaplib, ///< QAPLIB subset: n, flow matrix, distance matrix
};

/// Parses "matrix", "tsplib", "qaplib"; throws std::invalid_argument otherwise.
InstanceFormat parse_format_name(const std::string& name);

ProblemInstance parse_instance(const std::string& path, InstanceFormat format);
ProblemInstance parse_instance_text(const std::string& text, InstanceFormat format,
                                    const std::string& name = "instance");

/// Serializes to the plain matrix format (round-trips through parse_instance_text).
std::string write_instance_text(const ProblemInstance& inst);
void write_instance(const ProblemInstance& inst, const std::string& path);

} // namespace copq

#endif
