#pragma once

#include <stdexcept>
#include <string>

namespace landuse {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or missing inputs (files, config, CLI usage). The CLI maps these
// to exit status 2; all other errors exit 1.
class InputError : public Error {
public:
    using Error::Error;
};

class DuplicateSite : public Error {
public:
    using Error::Error;
};

class EmptySites : public Error {
public:
    using Error::Error;
};

class MissingTower : public Error {
public:
    using Error::Error;
};

class EmptySamples : public Error {
public:
    using Error::Error;
};

// Cell with zero total activity; excluded from clustering downstream.
class NoActivity : public Error {
public:
    using Error::Error;
};

class EmptyClass : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class TooFewPoints : public Error {
public:
    using Error::Error;
};

class SingleCluster : public Error {
public:
    using Error::Error;
};

class NoOverlap : public Error {
public:
    using Error::Error;
};

class NoEvaluableCells : public Error {
public:
    using Error::Error;
};

class Unsatisfiable : public Error {
public:
    using Error::Error;
};

} // namespace landuse
