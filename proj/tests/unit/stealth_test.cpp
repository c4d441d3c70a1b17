#include <doctest.h>

#include <array>
#include <set>
#include <thread>

#include "zkfi/errors.hpp"
#include "zkfi/statement.hpp"
#include "zkfi/stealth.hpp"

using namespace zkfi;

namespace {

ShieldedAccount freshAccount(Rng& rng) { return deriveAccount(rng.entropy()); }

}  // namespace

TEST_CASE("intended receiver recovers the exact secrets") {
    Rng rng = Rng::seeded(81);
    ShieldedAccount bob = freshAccount(rng);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t asset = uint32_t(rng.uniform(0xffffff) + 1);
        U256 value = U256(rng.uniform(1'000'000'000));
        StealthOutput out = createStealthOutput(bob.address(), asset, value, rng);
        auto secrets = scanAux(out, bob.viewKey, bob.signPub);
        REQUIRE(secrets.has_value());
        CHECK(secrets->asset == asset);
        CHECK(secrets->value == value);
        CHECK(stealthAddressFor(bob.signPub, secrets->blinding) == out.stealthAddress);
    }
}

TEST_CASE("ephemeral scalar keeps its top byte clear and the output is reproducible") {
    Rng rng = Rng::seeded(82);
    ShieldedAccount bob = freshAccount(rng);

    Rng sampler = Rng::seeded(83);
    Fq blinding = sampler.field();
    U256 ephemeral = sampler.bits248();
    CHECK(toBytesBE(ephemeral)[0] == 0);

    Rng replay = Rng::seeded(83);
    StealthOutput viaRng = createStealthOutput(bob.address(), 1, U256(42), replay);
    StealthOutput direct = createStealthOutput(bob.address(), 1, U256(42), blinding, ephemeral);
    CHECK(viaRng.stealthAddress == direct.stealthAddress);
    CHECK(viaRng.ephemeral == direct.ephemeral);
    CHECK(viaRng.box == direct.box);
}

TEST_CASE("outputs to one recipient use unlinkable one-time addresses") {
    Rng rng = Rng::seeded(84);
    ShieldedAccount bob = freshAccount(rng);
    std::set<std::string> addresses;
    for (int trial = 0; trial < 1000; ++trial) {
        StealthOutput out = createStealthOutput(bob.address(), 1, U256(5), rng);
        CHECK(addresses.insert(out.stealthAddress.toHex()).second);
    }
}

TEST_CASE("non-receivers bounce off the view tag or the stealth recheck") {
    Rng rng = Rng::seeded(85);
    ShieldedAccount bob = freshAccount(rng);
    ShieldedAccount eve = freshAccount(rng);
    int tagPass = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        StealthOutput out = createStealthOutput(bob.address(), 2, U256(9), rng);
        auto leaked = scanAux(out, eve.viewKey, eve.signPub);
        CHECK(!leaked.has_value());
        // count how often the one-byte tag let eve past the first filter
        AffinePoint shared = scalarMul(eve.viewKey, out.ephemeral);
        if (keccak256(compressPoint(shared))[0] == out.viewTag) ++tagPass;
    }
    CHECK(tagPass < 30);  // ~ 2000/256 expected
}

TEST_CASE("aux encoding round trips and rejects malformed blobs") {
    Rng rng = Rng::seeded(86);
    ShieldedAccount bob = freshAccount(rng);
    StealthOutput out = createStealthOutput(bob.address(), 3, U256(77), rng);
    auto aux = encodeAux(out);
    CHECK(aux.size() == 1 + 32 + 32 + 12 + 66 + 16);

    StealthOutput parsed = parseAux(aux);
    CHECK(parsed.viewTag == out.viewTag);
    CHECK(parsed.stealthAddress == out.stealthAddress);
    CHECK(parsed.ephemeral == out.ephemeral);
    CHECK(parsed.box == out.box);

    auto truncated = aux;
    truncated.resize(40);
    CHECK_THROWS_AS(parseAux(truncated), Error);

    auto badPoint = aux;
    for (size_t i = 33; i < 65; ++i) badPoint[i] = 0xff;
    CHECK_THROWS_AS(parseAux(badPoint), Error);
}

TEST_CASE("scanning a batch fans out safely across threads") {
    Rng rng = Rng::seeded(88);
    ShieldedAccount bob = freshAccount(rng);
    ShieldedAccount eve = freshAccount(rng);

    std::vector<StealthOutput> batch;
    std::vector<bool> mine;
    for (int i = 0; i < 64; ++i) {
        bool forBob = rng.uniform(2) == 0;
        const ShieldedAccount& to = forBob ? bob : eve;
        batch.push_back(createStealthOutput(to.address(), 1, U256(uint64_t(i + 1)), rng));
        mine.push_back(forBob);
    }

    std::array<std::vector<int>, 4> found;
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            for (size_t i = size_t(w); i < batch.size(); i += 4) {
                if (scanAux(batch[i], bob.viewKey, bob.signPub)) found[size_t(w)].push_back(int(i));
            }
        });
    }
    for (auto& t : workers) t.join();

    std::set<int> recovered;
    for (const auto& part : found) recovered.insert(part.begin(), part.end());
    for (size_t i = 0; i < batch.size(); ++i) CHECK(recovered.count(int(i)) == size_t(mine[i] ? 1 : 0));
}

TEST_CASE("ownership witness construction") {
    Rng rng = Rng::seeded(87);
    ShieldedAccount alice = freshAccount(rng);
    Fq blinding = rng.field();
    Fq stealth = stealthAddressFor(alice.signPub, blinding);

    OwnershipWitness witness = ownershipWitness(stealth, alice.signPub, blinding);
    CHECK(witness.owner == alice.signPub);
    CHECK(witness.blinding == blinding);

    CHECK_THROWS_AS(ownershipWitness(stealth, alice.signPub, blinding + Fq::one()), Error);
    ShieldedAccount other = freshAccount(rng);
    CHECK_THROWS_AS(ownershipWitness(stealth, other.signPub, blinding), Error);
}
