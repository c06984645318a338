// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <stdexcept>
#include <string>

namespace l3 {

/// Base class for all l3pipe errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside an operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A spec file, data table or component combination is inconsistent.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Normal equations are singular at lambda = 0.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Training produced no usable classes.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// A transform table slot or a table slice is empty when it must not be.
class MissingData : public Error {
public:
    using Error::Error;
};

/// Every candidate lambda was rejected by the GCV denominator test.
class DegenerateFit : public Error {
public:
    using Error::Error;
};

/// The slanted-edge estimator could not find a usable edge.
class NoEdgeError : public Error {
public:
    using Error::Error;
};

/// File could not be read, written or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace l3
