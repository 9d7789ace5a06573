#include <kanex/dsl.hpp>

#include <kanex/enumerate.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace kanex {

using std::string;
using std::vector;

auto SourceLocation::str() const -> string
{
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
}

DslError::DslError(string kind, const string & message, SourceLocation location, vector<string> witness) :
    Error(location.str() + ": " + kind + ": " + message, std::move(witness)),
    kind_(std::move(kind)), message_(message), location_(std::move(location))
{
}

namespace {

auto lookup_failure(const string & what, const string & name) -> UnknownName
{
    return UnknownName("no " + what + " named '" + name + "'", {name});
}

}

auto Workspace::category(const string & name) const -> CatPtr
{
    if (auto it = categories.find(name) ; it != categories.end())
        return it->second;
    throw lookup_failure("category", name);
}

auto Workspace::functor(const string & name) const -> Functor
{
    if (auto it = functors.find(name) ; it != functors.end())
        return it->second.functor;
    if (name.starts_with("Id_"))
        if (auto it = categories.find(name.substr(3)) ; it != categories.end())
            return identity_functor(it->second);
    throw lookup_failure("functor", name);
}

auto Workspace::transformation(const string & name) const -> NatTrans
{
    if (auto it = transformations.find(name) ; it != transformations.end())
        return it->second.transformation;
    throw lookup_failure("transformation", name);
}

auto Workspace::monad(const string & name) const -> Monad
{
    if (auto it = monads.find(name) ; it != monads.end())
        return it->second.monad;
    throw lookup_failure("monad", name);
}

auto Workspace::concrete(const string & name) const -> ConcretePtr
{
    if (auto it = concretes.find(name) ; it != concretes.end())
        return it->second.category;
    throw lookup_failure("concrete category", name);
}

auto Workspace::identity(const string & name) const -> PolymericIdentity
{
    if (auto it = identities.find(name) ; it != identities.end())
        return it->second.identity;
    throw lookup_failure("polymeric identity", name);
}

auto Workspace::category_name(const FinCategory & c) const -> std::optional<string>
{
    for (auto & [kind, name] : order)
        if (kind == Kind::category && *categories.at(name) == c)
            return name;
    return std::nullopt;
}

namespace {

auto bare_char(char c) -> bool
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
}

enum class Tok { name, symbol, newline, end };

struct Token
{
    Tok kind;
    string text;
    SourceLocation location;
    bool quoted = false;
};

auto tokenize(const string & text, const string & file) -> vector<Token>
{
    vector<Token> tokens;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto here = [&] { return SourceLocation{file, line, column}; };
    auto advance = [&] (std::size_t n = 1) {
        for (std::size_t k = 0 ; k < n && i < text.size() ; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            }
            else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            tokens.push_back({Tok::newline, "\n", here()});
            advance();
        }
        else if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
        }
        else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
            while (i < text.size() && text[i] != '\n')
                advance();
        }
        else if (c == '"') {
            auto start = here();
            advance();
            string value;
            while (true) {
                if (i >= text.size() || text[i] == '\n')
                    throw SyntaxError("unterminated quoted name", start);
                if (text[i] == '"')
                    break;
                if (text[i] == '\\' && i + 1 < text.size()) {
                    advance();
                    if (text[i] != '"' && text[i] != '\\')
                        throw SyntaxError("unknown escape \\" + string(1, text[i]), here());
                }
                value += text[i];
                advance();
            }
            advance();
            tokens.push_back({Tok::name, value, start, true});
        }
        else if (text.compare(i, 2, "->") == 0 || text.compare(i, 2, "=>") == 0) {
            tokens.push_back({Tok::symbol, text.substr(i, 2), here()});
            advance(2);
        }
        else if (string("{}:;,.=()").find(c) != string::npos) {
            tokens.push_back({Tok::symbol, string(1, c), here()});
            advance();
        }
        else if (bare_char(c)) {
            auto start = here();
            string value;
            while (i < text.size() && bare_char(text[i])) {
                value += text[i];
                advance();
            }
            tokens.push_back({Tok::name, value, start});
        }
        else {
            throw SyntaxError("unexpected character '" + string(1, c) + "'", here());
        }
    }
    tokens.push_back({Tok::end, "", here()});
    return tokens;
}

struct Located
{
    string name;
    SourceLocation location;
};

/// A chain of functor names composed with '.'.
struct Expression
{
    vector<Located> atoms;
    SourceLocation location;

    auto text() const -> string
    {
        string out;
        for (std::size_t i = 0 ; i < atoms.size() ; ++i)
            out += (i ? " . " : "") + quote_name(atoms[i].name);
        return out;
    }
};

class Parser
{
  public:
    Parser(Workspace & workspace, const string & text, const string & file) :
        ws_(workspace), tokens_(tokenize(text, file))
    {
    }

    void run()
    {
        skip_newlines();
        while (peek().kind != Tok::end) {
            auto keyword = expect_name("a declaration");
            if (keyword.name == "category")
                category();
            else if (keyword.name == "functor")
                functor();
            else if (keyword.name == "nat")
                nat();
            else if (keyword.name == "monad")
                monad();
            else if (keyword.name == "concrete")
                concrete();
            else if (keyword.name == "identity")
                identity();
            else
                throw SyntaxError("expected a declaration, found '" + keyword.name + "'", keyword.location);
            skip_newlines();
        }
    }

  private:
    Workspace & ws_;
    vector<Token> tokens_;
    std::size_t pos_ = 0;

    auto peek() const -> const Token & { return tokens_[pos_]; }
    auto next() -> const Token & { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    auto is_symbol(const string & s) const -> bool { return peek().kind == Tok::symbol && peek().text == s; }

    void skip_newlines()
    {
        while (peek().kind == Tok::newline)
            next();
    }

    auto describe(const Token & t) const -> string
    {
        switch (t.kind) {
            case Tok::end: return "end of input";
            case Tok::newline: return "end of line";
            default: return "'" + t.text + "'";
        }
    }

    void expect(const string & symbol)
    {
        if (! is_symbol(symbol))
            throw SyntaxError("expected '" + symbol + "', found " + describe(peek()), peek().location);
        next();
    }

    auto expect_name(const string & what) -> Located
    {
        if (peek().kind != Tok::name)
            throw SyntaxError("expected " + what + ", found " + describe(peek()), peek().location);
        auto & t = next();
        return {t.text, t.location};
    }

    auto expect_keyword(const string & keyword) -> Located
    {
        auto t = peek();
        if (t.kind != Tok::name || t.quoted || t.text != keyword)
            throw SyntaxError("expected '" + keyword + "', found " + describe(t), t.location);
        next();
        return {t.text, t.location};
    }

    auto expect_number(const string & what) -> int
    {
        auto n = expect_name(what);
        if (n.name.empty() || ! std::all_of(n.name.begin(), n.name.end(), [] (char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw SyntaxError("expected " + what + ", found '" + n.name + "'", n.location);
        return std::stoi(n.name);
    }

    /// Blocks: '{' statements '}' where each statement starts with a keyword handled by body.
    template <typename Body>
    void block(Body && body)
    {
        skip_newlines();
        expect("{");
        while (true) {
            while (peek().kind == Tok::newline || is_symbol(";"))
                next();
            if (is_symbol("}")) {
                next();
                return;
            }
            auto keyword = expect_name("a statement");
            body(keyword);
            if (is_symbol("}"))
                continue;
            if (peek().kind != Tok::newline && ! is_symbol(";"))
                throw SyntaxError("expected end of statement, found " + describe(peek()), peek().location);
        }
    }

    /// item (',' item)*, newlines allowed after commas.
    template <typename Item>
    void list(Item && item)
    {
        item();
        while (is_symbol(",")) {
            next();
            skip_newlines();
            item();
        }
    }

    void declare(Workspace::Kind kind, const Located & name)
    {
        bool taken = false;
        switch (kind) {
            case Workspace::Kind::category: taken = ws_.categories.contains(name.name); break;
            case Workspace::Kind::functor: taken = ws_.functors.contains(name.name); break;
            case Workspace::Kind::nat: taken = ws_.transformations.contains(name.name); break;
            case Workspace::Kind::monad: taken = ws_.monads.contains(name.name); break;
            case Workspace::Kind::concrete: taken = ws_.concretes.contains(name.name); break;
            case Workspace::Kind::identity: taken = ws_.identities.contains(name.name); break;
        }
        if (taken)
            throw DslError("Redefinition", "'" + name.name + "' is already defined", name.location, {name.name});
        ws_.order.emplace_back(kind, name.name);
    }

    /// Runs an engine call, relocating its error to the declaration.
    template <typename Call>
    auto located(const SourceLocation & location, Call && call) -> decltype(call())
    {
        try {
            return call();
        }
        catch (const DslError &) {
            throw;
        }
        catch (const MissingComposite & e) { throw DslError("MissingComposite", e.what(), location, e.witness()); }
        catch (const LawViolation & e) { throw DslError("LawViolation", e.what(), location, e.witness()); }
        catch (const FunctorialityViolation & e) { throw DslError("FunctorialityViolation", e.what(), location, e.witness()); }
        catch (const NaturalitySquareViolation & e) { throw DslError("NaturalitySquareViolation", e.what(), location, e.witness()); }
        catch (const NotFaithful & e) { throw DslError("NotFaithful", e.what(), location, e.witness()); }
        catch (const PreconditionUnmet & e) { throw DslError("PreconditionUnmet", e.what(), location, e.witness()); }
        catch (const UnknownName & e) { throw DslError("UnknownReference", e.what(), location, e.witness()); }
        catch (const Error & e) { throw DslError("Error", e.what(), location, e.witness()); }
    }

    auto category_ref(const Located & name) -> CatPtr
    {
        if (auto it = ws_.categories.find(name.name) ; it != ws_.categories.end())
            return it->second;
        throw UnknownReference(name.name, "category", name.location);
    }

    auto expression() -> Expression
    {
        Expression e{{}, peek().location};
        std::function<void ()> term = [&] {
            if (is_symbol("(")) {
                next();
                term();
                while (is_symbol(".")) {
                    next();
                    term();
                }
                expect(")");
                return;
            }
            e.atoms.push_back(expect_name("a functor"));
        };
        term();
        while (is_symbol(".")) {
            next();
            term();
        }
        return e;
    }

    auto evaluate(const Expression & e) -> Functor
    {
        std::optional<Functor> result;
        for (auto & atom : e.atoms) {
            Functor f = [&] {
                if (auto it = ws_.functors.find(atom.name) ; it != ws_.functors.end())
                    return it->second.functor;
                if (atom.name.starts_with("Id_"))
                    if (auto it = ws_.categories.find(atom.name.substr(3)) ; it != ws_.categories.end())
                        return identity_functor(it->second);
                throw UnknownReference(atom.name, "functor", atom.location);
            }();
            if (! result) {
                result = f;
            }
            else {
                if (! (result->source() == f.target()))
                    throw DslError("FunctorialityViolation", "cannot compose: source of the left factor is not the target of '"
                            + atom.name + "'", atom.location, {atom.name});
                result = compose(*result, f);
            }
        }
        return *result;
    }

    auto nat_ref(const Located & name) -> NatTrans
    {
        if (auto it = ws_.transformations.find(name.name) ; it != ws_.transformations.end())
            return it->second.transformation;
        throw UnknownReference(name.name, "transformation", name.location);
    }

    void category()
    {
        auto name = expect_name("a category name");
        Presentation p;
        std::set<string> objects, morphisms;
        vector<Located> referenced;
        block([&] (const Located & keyword) {
            expect(":");
            if (keyword.name == "objects") {
                list([&] {
                    auto o = expect_name("an object");
                    if (! objects.insert(o.name).second)
                        throw DslError("Redefinition", "object '" + o.name + "' is declared twice", o.location, {o.name});
                    p.objects.push_back(o.name);
                });
            }
            else if (keyword.name == "morphisms") {
                list([&] {
                    auto m = expect_name("a morphism");
                    expect(":");
                    auto s = expect_name("a source object");
                    expect("->");
                    auto t = expect_name("a target object");
                    for (auto & end : {s, t})
                        if (! objects.contains(end.name))
                            throw UnknownReference(end.name, "object", end.location);
                    if (! morphisms.insert(m.name).second || m.name == identity_name(s.name))
                        throw DslError("Redefinition", "morphism '" + m.name + "' is declared twice", m.location, {m.name});
                    p.morphisms.push_back({m.name, s.name, t.name});
                });
            }
            else if (keyword.name == "compose") {
                list([&] {
                    auto g = expect_name("a morphism");
                    expect(".");
                    auto f = expect_name("a morphism");
                    expect("=");
                    auto h = expect_name("a morphism");
                    for (auto & m : {g, f, h}) {
                        bool identity = false;
                        for (auto & o : p.objects)
                            identity = identity || m.name == identity_name(o);
                        if (! morphisms.contains(m.name) && ! identity)
                            throw UnknownReference(m.name, "morphism", m.location);
                    }
                    p.compositions.push_back({g.name, f.name, h.name});
                });
            }
            else {
                throw SyntaxError("expected objects, morphisms or compose, found '" + keyword.name + "'", keyword.location);
            }
        });
        auto built = located(name.location, [&] { return make_category(p); });
        declare(Workspace::Kind::category, name);
        ws_.categories[name.name] = built;
    }

    void functor()
    {
        auto name = expect_name("a functor name");
        if (is_symbol("=")) {
            next();
            auto e = expression();
            auto f = evaluate(e);
            declare(Workspace::Kind::functor, name);
            auto source = ws_.category_name(f.source()), target = ws_.category_name(f.target());
            if (! source || ! target)
                throw DslError("UnknownReference", "composite has no named source or target", e.location);
            ws_.functors[name.name] = {f, *source, *target};
            return;
        }
        expect(":");
        auto s = expect_name("a source category");
        expect("->");
        auto t = expect_name("a target category");
        auto source = category_ref(s), target = category_ref(t);
        vector<std::pair<string, string>> objects, morphisms;
        block([&] (const Located & keyword) {
            bool is_obj = keyword.name == "obj";
            if (! is_obj && keyword.name != "mor")
                throw SyntaxError("expected obj or mor, found '" + keyword.name + "'", keyword.location);
            list([&] {
                auto from = expect_name(is_obj ? "an object" : "a morphism");
                expect("=>");
                auto to = expect_name(is_obj ? "an object" : "a morphism");
                if (is_obj) {
                    if (! source->find_object(from.name))
                        throw UnknownReference(from.name, "object", from.location);
                    if (! target->find_object(to.name))
                        throw UnknownReference(to.name, "object", to.location);
                    objects.emplace_back(from.name, to.name);
                }
                else {
                    if (! source->find_morphism(from.name))
                        throw UnknownReference(from.name, "morphism", from.location);
                    if (! target->find_morphism(to.name))
                        throw UnknownReference(to.name, "morphism", to.location);
                    morphisms.emplace_back(from.name, to.name);
                }
            });
        });
        auto f = located(name.location, [&] { return build_functor(source, target, objects, morphisms); });
        declare(Workspace::Kind::functor, name);
        ws_.functors[name.name] = {f, s.name, t.name};
    }

    void nat()
    {
        auto name = expect_name("a transformation name");
        expect(":");
        auto source_expr = expression();
        expect("=>");
        auto target_expr = expression();
        auto source = evaluate(source_expr), target = evaluate(target_expr);
        if (! (source.source() == target.source()) || ! (source.target() == target.target()))
            throw DslError("FunctorialityViolation", "functors of a transformation must be parallel", target_expr.location);
        auto & c = source.source();
        auto & d = source.target();
        vector<MorId> components(c.num_objects(), none);
        block([&] (const Located & keyword) {
            if (keyword.name != "at")
                throw SyntaxError("expected at, found '" + keyword.name + "'", keyword.location);
            list([&] {
                auto o = expect_name("an object");
                expect(":");
                auto m = expect_name("a morphism");
                auto a = c.find_object(o.name);
                if (! a)
                    throw UnknownReference(o.name, "object", o.location);
                auto f = d.find_morphism(m.name);
                if (! f)
                    throw UnknownReference(m.name, "morphism", m.location);
                components[*a] = *f;
            });
        });
        for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
            if (components[a] != none)
                continue;
            auto hom = d.hom(source.obj(a), target.obj(a));
            if (hom.size() != 1)
                throw DslError("MissingComposite", "component at " + c.object_name(a) + " is not forced ("
                        + std::to_string(hom.size()) + " candidates)", name.location, {c.object_name(a)});
            components[a] = hom[0];
        }
        auto t = located(name.location, [&] { return build_nat_trans(source, target, components); });
        declare(Workspace::Kind::nat, name);
        ws_.transformations[name.name] = {t, source_expr.text(), target_expr.text()};
    }

    void monad()
    {
        auto name = expect_name("a monad name");
        std::optional<Expression> functor;
        std::optional<Located> unit, mult;
        block([&] (const Located & keyword) {
            expect(":");
            if (keyword.name == "functor")
                functor = expression();
            else if (keyword.name == "unit")
                unit = expect_name("a transformation");
            else if (keyword.name == "mult")
                mult = expect_name("a transformation");
            else
                throw SyntaxError("expected functor, unit or mult, found '" + keyword.name + "'", keyword.location);
        });
        if (! functor || ! unit || ! mult)
            throw SyntaxError("monad needs functor, unit and mult", name.location);
        auto m = evaluate(*functor);
        auto eta = nat_ref(*unit), mu = nat_ref(*mult);
        auto monad = located(name.location, [&] { return build_monad(m, eta, mu); });
        declare(Workspace::Kind::monad, name);
        ws_.monads[name.name] = {monad, functor->text(), unit->name, mult->name};
    }

    void concrete()
    {
        auto name = expect_name("a concrete category name");
        std::optional<Located> total;
        std::optional<Expression> forgetful;
        block([&] (const Located & keyword) {
            expect(":");
            if (keyword.name == "total")
                total = expect_name("a category");
            else if (keyword.name == "forgetful")
                forgetful = expression();
            else
                throw SyntaxError("expected total or forgetful, found '" + keyword.name + "'", keyword.location);
        });
        if (! forgetful)
            throw SyntaxError("concrete category needs a forgetful functor", name.location);
        auto u = evaluate(*forgetful);
        auto total_name = ws_.category_name(u.source());
        if (total) {
            if (! (*category_ref(*total) == u.source()))
                throw DslError("NotConcrete", "forgetful functor does not start at " + total->name, total->location);
            total_name = total->name;
        }
        if (! total_name)
            throw DslError("UnknownReference", "total category has no name", forgetful->location);
        auto c = located(name.location, [&] { return std::make_shared<const ConcreteCategory>(make_concrete(u)); });
        declare(Workspace::Kind::concrete, name);
        ws_.concretes[name.name] = {c, *total_name, forgetful->text()};
    }

    void identity()
    {
        auto name = expect_name("an identity name");
        expect_keyword("over");
        auto functor_expr = expression();
        auto f = evaluate(functor_expr);
        std::optional<Located> lhs, rhs;
        std::optional<std::pair<int, int>> arity;
        block([&] (const Located & keyword) {
            expect(":");
            if (keyword.name == "lhs") {
                lhs = expect_name("a transformation");
            }
            else if (keyword.name == "rhs") {
                rhs = expect_name("a transformation");
            }
            else if (keyword.name == "arity") {
                int m = expect_number("an arity");
                expect(",");
                arity = std::pair{m, expect_number("an arity")};
            }
            else {
                throw SyntaxError("expected lhs, rhs or arity, found '" + keyword.name + "'", keyword.location);
            }
        });
        if (! lhs || ! rhs || ! arity)
            throw SyntaxError("identity needs lhs, rhs and arity", name.location);
        auto phi = nat_ref(*lhs), psi = nat_ref(*rhs);
        auto identity = located(name.location, [&] { return make_polymeric_identity(f, phi, psi, arity->first, arity->second); });
        declare(Workspace::Kind::identity, name);
        ws_.identities[name.name] = {identity, functor_expr.text(), lhs->name, rhs->name};
    }
};

}

void parse_into(Workspace & workspace, const string & text, const string & file)
{
    Parser(workspace, text, file).run();
}

auto parse(const string & text, const string & file) -> Workspace
{
    Workspace w;
    parse_into(w, text, file);
    return w;
}

void parse_file_into(Workspace & workspace, const string & path)
{
    std::ifstream in(path);
    if (! in)
        throw DslError("IOError", "cannot read file", SourceLocation{path, 0, 0});
    std::stringstream buffer;
    buffer << in.rdbuf();
    parse_into(workspace, buffer.str(), path);
}

auto parse_file(const string & path) -> Workspace
{
    Workspace w;
    parse_file_into(w, path);
    return w;
}

auto quote_name(const string & name) -> string
{
    static const std::set<string> reserved = {"category", "functor", "nat", "monad", "concrete", "identity", "over"};
    bool bare = ! name.empty() && std::all_of(name.begin(), name.end(), bare_char) && ! reserved.contains(name);
    if (bare)
        return name;
    string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

namespace {

template <typename Items, typename Show>
auto joined(const Items & items, Show && show) -> string
{
    string out;
    bool first = true;
    for (auto & item : items) {
        out += (first ? "" : ", ") + show(item);
        first = false;
    }
    return out;
}

void render_category(std::ostream & out, const string & name, const FinCategory & c)
{
    auto p = c.presentation();
    out << "category " << quote_name(name) << " {\n";
    if (! p.objects.empty())
        out << "    objects: " << joined(p.objects, quote_name) << "\n";
    if (! p.morphisms.empty())
        out << "    morphisms: " << joined(p.morphisms, [] (const MorphismSpec & m) {
            return quote_name(m.name) + ": " + quote_name(m.source) + " -> " + quote_name(m.target);
        }) << "\n";
    if (! p.compositions.empty())
        out << "    compose: " << joined(p.compositions, [] (const CompositionFact & f) {
            return quote_name(f.after) + " . " + quote_name(f.before) + " = " + quote_name(f.result);
        }) << "\n";
    out << "}\n";
}

void render_functor(std::ostream & out, const string & name, const FunctorEntry & entry)
{
    auto & f = entry.functor;
    auto & c = f.source();
    auto & d = f.target();
    out << "functor " << quote_name(name) << " : " << quote_name(entry.source) << " -> " << quote_name(entry.target) << " {\n";
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        out << "    obj " << quote_name(c.object_name(a)) << " => " << quote_name(d.object_name(f.obj(a))) << "\n";
    for (MorId m = 0 ; m < c.num_morphisms() ; ++m)
        if (! c.is_identity(m))
            out << "    mor " << quote_name(c.morphism_name(m)) << " => " << quote_name(d.morphism_name(f.mor(m))) << "\n";
    out << "}\n";
}

}

auto render(const Workspace & workspace) -> string
{
    std::ostringstream out;
    bool first = true;
    for (auto & [kind, name] : workspace.order) {
        if (! first)
            out << "\n";
        first = false;
        switch (kind) {
            case Workspace::Kind::category:
                render_category(out, name, *workspace.categories.at(name));
                break;
            case Workspace::Kind::functor:
                render_functor(out, name, workspace.functors.at(name));
                break;
            case Workspace::Kind::nat: {
                auto & entry = workspace.transformations.at(name);
                auto & t = entry.transformation;
                auto & c = t.source().source();
                out << "nat " << quote_name(name) << " : " << entry.source << " => " << entry.target << " {\n";
                for (ObjId a = 0 ; a < c.num_objects() ; ++a)
                    out << "    at " << quote_name(c.object_name(a)) << ": " << quote_name(t.source().target().morphism_name(t.at(a))) << "\n";
                out << "}\n";
                break;
            }
            case Workspace::Kind::monad: {
                auto & entry = workspace.monads.at(name);
                out << "monad " << quote_name(name) << " {\n    functor: " << entry.functor << "\n    unit: "
                    << quote_name(entry.unit) << "\n    mult: " << quote_name(entry.multiplication) << "\n}\n";
                break;
            }
            case Workspace::Kind::concrete: {
                auto & entry = workspace.concretes.at(name);
                out << "concrete " << quote_name(name) << " {\n    total: " << quote_name(entry.total)
                    << "\n    forgetful: " << entry.forgetful << "\n}\n";
                break;
            }
            case Workspace::Kind::identity: {
                auto & entry = workspace.identities.at(name);
                out << "identity " << quote_name(name) << " over " << entry.endofunctor << " {\n    lhs: " << quote_name(entry.lhs)
                    << "\n    rhs: " << quote_name(entry.rhs) << "\n    arity: " << entry.identity.m << ", " << entry.identity.n << "\n}\n";
                break;
            }
        }
    }
    return out.str();
}

}
