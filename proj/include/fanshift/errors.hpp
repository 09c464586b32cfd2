#ifndef FANSHIFT_ERRORS_HPP
#define FANSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanshift {

// Every library error derives from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error { public: using Error::Error; };
class IndexError : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class WindowExhausted : public Error { public: using Error::Error; };
class ResourceError : public Error { public: using Error::Error; };
class PathNotFound : public Error { public: using Error::Error; };
class HypothesisViolated : public Error { public: using Error::Error; };
class WellDefinednessError : public Error { public: using Error::Error; };
class TruncationError : public Error { public: using Error::Error; };
class NotDistinguished : public Error { public: using Error::Error; };
class UsageError : public Error { public: using Error::Error; };

}  // namespace fanshift

#endif
