#pragma once

// The .cat presentation language: a workspace of named categories, functors, transformations,
// monads, concrete categories and polymeric identities, its parser and its canonical printer.
//
//   category C { objects: a, b; morphisms: f: a -> b, g: b -> b; compose: g . f = f }
//   functor F : C -> D { obj a => x; mor f => h }
//   functor G = F . Id_C
//   nat t : F => G { at a: h }
//   monad M { functor: T; unit: eta; mult: mu }
//   concrete X { total: A; forgetful: U }
//   identity I over T { lhs: phi; rhs: psi; arity: 1, 0 }
//
// Statements end at ';', a newline or '}'. Names are bare (letters, digits, _ ' *) or quoted.
// Id_C names the identity functor of C unless a functor of that name exists. Identities are
// implicit; morphism images, composites and components may be omitted when forced.

#include <kanex/algebra.hpp>
#include <kanex/concrete.hpp>
#include <kanex/errors.hpp>
#include <kanex/kan.hpp>
#include <kanex/kernel.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kanex {

struct SourceLocation
{
    std::string file;
    int line = 1;
    int column = 1;

    auto str() const -> std::string;
};

/// An error located in a source file. kind() names the category of failure: SyntaxError,
/// UnknownReference, Redefinition or the engine error it wraps (LawViolation, ...).
class DslError : public Error
{
  public:
    DslError(std::string kind, const std::string & message, SourceLocation location, std::vector<std::string> witness = {});

    auto kind() const -> const std::string & { return kind_; }
    auto location() const -> const SourceLocation & { return location_; }
    auto message() const -> const std::string & { return message_; }

  private:
    std::string kind_;
    std::string message_;
    SourceLocation location_;
};

class SyntaxError : public DslError
{
  public:
    SyntaxError(const std::string & message, SourceLocation location) : DslError("SyntaxError", message, std::move(location)) {}
};

class UnknownReference : public DslError
{
  public:
    UnknownReference(const std::string & name, const std::string & what, SourceLocation location) :
        DslError("UnknownReference", "unknown " + what + " '" + name + "'", std::move(location), {name})
    {
    }
};

struct FunctorEntry
{
    Functor functor;
    std::string source;
    std::string target;
};

struct NatEntry
{
    NatTrans transformation;
    /// Canonical text of the functor expressions.
    std::string source;
    std::string target;
};

struct MonadEntry
{
    Monad monad;
    std::string functor;
    std::string unit;
    std::string multiplication;
};

struct ConcreteEntry
{
    ConcretePtr category;
    std::string total;
    std::string forgetful;
};

struct IdentityEntry
{
    PolymericIdentity identity;
    std::string endofunctor;
    std::string lhs;
    std::string rhs;
};

class Workspace
{
  public:
    enum class Kind { category, functor, nat, monad, concrete, identity };

    std::map<std::string, CatPtr> categories;
    std::map<std::string, FunctorEntry> functors;
    std::map<std::string, NatEntry> transformations;
    std::map<std::string, MonadEntry> monads;
    std::map<std::string, ConcreteEntry> concretes;
    std::map<std::string, IdentityEntry> identities;
    /// Declaration order, for printing.
    std::vector<std::pair<Kind, std::string>> order;

    auto empty() const -> bool { return order.empty(); }

    auto category(const std::string & name) const -> CatPtr;
    auto functor(const std::string & name) const -> Functor;
    auto transformation(const std::string & name) const -> NatTrans;
    auto monad(const std::string & name) const -> Monad;
    auto concrete(const std::string & name) const -> ConcretePtr;
    auto identity(const std::string & name) const -> PolymericIdentity;

    /// The name of a category of the workspace equal to c, if any.
    auto category_name(const FinCategory & c) const -> std::optional<std::string>;
};

/// Parses into an existing workspace so that several files can refer to each other.
void parse_into(Workspace & workspace, const std::string & text, const std::string & file = "<input>");
auto parse(const std::string & text, const std::string & file = "<input>") -> Workspace;
auto parse_file(const std::string & path) -> Workspace;
void parse_file_into(Workspace & workspace, const std::string & path);

/// Canonical text: every composite, morphism image and component written out.
auto render(const Workspace & workspace) -> std::string;

/// Name as it would be written in source: bare when possible, quoted otherwise.
auto quote_name(const std::string & name) -> std::string;

}
