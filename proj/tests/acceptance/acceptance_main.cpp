// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run from the repository root (fixed vectors live under
// vectors/).
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "support/auditor.hpp"
#include "support/fixtures.hpp"
#include "support/ref_keccak.hpp"
#include "support/ref_poseidon.hpp"
#include "support/statement_oracle.hpp"
#include "support/world.hpp"
#include "zkfi/aead.hpp"
#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"
#include "zkfi/poseidon.hpp"

using namespace zkfi;
using zkfi_test::FundedScenario;
using zkfi_test::SimWorld;
using Clock = std::chrono::steady_clock;

#define REQUIRE_OK(expr)                                                      \
    do {                                                                      \
        OpResult requireOkResult = (expr);                                    \
        if (!requireOkResult.ok()) {                                          \
            std::printf("setup failure: %s\n", requireOkResult.detail.c_str()); \
            std::exit(2);                                                     \
        }                                                                     \
    } while (0)

namespace {

int failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion 1: exhaustive statement/oracle agreement ---------------------

void criterion1() {
    auto start = Clock::now();
    Rng rng = Rng::seeded(9001);
    ShieldedAccount alice = deriveAccount(rng.entropy());
    ShieldedAccount bob = deriveAccount(rng.entropy());
    FundedScenario scenario(6);

    // note pool: two copies of every (asset, value) pair, assets {1,2},
    // values 0..8, plus one foreign-owned note for ownership mutations
    std::vector<const FundedScenario::Funded*> asset1a, asset1b, asset2a;
    for (uint64_t v = 0; v <= 8; ++v) asset1a.push_back(&scenario.fund(alice, 1, v, rng));
    for (uint64_t v = 0; v <= 8; ++v) asset1b.push_back(&scenario.fund(alice, 1, v, rng));
    for (uint64_t v = 0; v <= 8; ++v) asset2a.push_back(&scenario.fund(alice, 2, v, rng));
    const auto& bobNote = scenario.fund(bob, 1, 5, rng);

    long cases = 0, disagreements = 0, truths = 0;
    int mutationWheel = 0;

    auto evaluate = [&](const PublicInputs& pub, const PrivateInputs& wit) {
        bool lhs = checkStatement(pub, wit);
        bool rhs = zkfi_ref::statementOracle(pub, wit);
        ++cases;
        if (lhs) ++truths;
        if (lhs != rhs) ++disagreements;
    };

    for (uint64_t v1 = 0; v1 <= 8; ++v1) {
        for (int second = -1; second < 14; ++second) {
            const FundedScenario::Funded* in2 = nullptr;
            if (second >= 0 && second < 5) in2 = asset1b[size_t(second) * 2];  // values 0,2,4,6,8
            else if (second >= 5) in2 = asset2a[size_t(second - 5)];           // values 0..8

            for (int outSel = 0; outSel < 13; ++outSel) {
                uint32_t outAsset = outSel < 9 ? 1 : 2;
                uint64_t outValue = outSel < 9 ? uint64_t(outSel) : uint64_t(2 * (outSel - 9));
                for (int out2Sel = 0; out2Sel < 2; ++out2Sel) {
                    PublicInputs pub = scenario.freshPublic();
                    PrivateInputs wit;
                    scenario.setInput(pub, wit, 0, *asset1a[v1]);
                    if (in2) scenario.setInput(pub, wit, 1, *in2);
                    scenario.setOutput(pub, wit, 0, outAsset, outValue, asset1a[v1]->note.stealthAddress);
                    if (out2Sel == 1) scenario.setOutput(pub, wit, 1, 2, 5, bobNote.note.stealthAddress);

                    // balancing public values per asset: V = outputs - inputs
                    int64_t perAsset[3] = {0, 0, 0};
                    perAsset[1] -= int64_t(v1);
                    if (in2) perAsset[in2->note.asset] -= int64_t(in2->note.value.w[0]);
                    perAsset[outAsset] += int64_t(outValue);
                    if (out2Sel == 1) perAsset[2] += 5;
                    unsigned slot = 2;
                    for (uint32_t asset = 1; asset <= 2; ++asset) {
                        if (perAsset[asset] == 0) continue;
                        pub.publicAsset[slot] = asset;
                        pub.publicValue[slot] = perAsset[asset];
                        ++slot;
                    }
                    evaluate(pub, wit);  // balanced construction

                    // unbalanced twin: nudge one public value
                    PublicInputs off = pub;
                    if (off.publicAsset[2] == 0) {
                        off.publicAsset[2] = 1;
                        off.publicValue[2] = 1;
                    } else {
                        off.publicValue[2] += 1;
                    }
                    evaluate(off, wit);

                    // one mutated twin per construction, families round-robin
                    PublicInputs mpub = pub;
                    PrivateInputs mwit = wit;
                    switch (mutationWheel++ % 8) {
                        case 0: mwit.inSig[0].response = mwit.inSig[0].response + Fr::one(); break;
                        case 1:
                            mwit.inOwner[0] = bob.signPub;
                            mwit.inSig[0] = bobNote.signature;
                            break;
                        case 2: mwit.inBlinding[0] += Fq::one(); break;
                        case 3: mwit.inLeaf[0] += 1; break;
                        case 4: mwit.inPath[0].siblings[2] += Fq::one(); break;
                        case 5: mpub.nullifier[0] += Fq::one(); break;
                        case 6: mpub.nullifier[3] = Fq(77); break;   // dummy slot violation
                        case 7: mpub.publicValue[3] = 2; break;      // value without an asset
                    }
                    evaluate(mpub, mwit);
                }
            }
        }
    }

    double elapsed = secondsSince(start);
    bool pass = cases >= 10000 && disagreements == 0 && truths > 500 && truths < cases && elapsed < 60.0;
    report(1, "statement checker agrees with the brute-force evaluator", pass,
           std::to_string(cases) + " cases, " + std::to_string(disagreements) + " disagreements, " +
               std::to_string(truths) + " true verdicts, " + std::to_string(elapsed).substr(0, 5) + "s");
}

// --- criterion 2: end-to-end conservation over 200 operations ---------------

void criterion2() {
    auto start = Clock::now();
    SimWorld world(9002);
    std::vector<ShieldedAccount> keys{world.alice, world.bob, world.carol};
    Rng driver = Rng::seeded(90020);

    int accepted = 0, steps = 0, auditFailures = 0;
    std::string firstFailure;
    while (accepted < 200 && steps < 600) {
        ++steps;
        uint64_t dice = driver.uniform(100);
        const ShieldedAccount& actor = keys[driver.uniform(3)];
        try {
            if (dice < 40) {
                if (world.deposit(actor, uint32_t(driver.uniform(2) + 1), 300 + driver.uniform(900)).ok()) ++accepted;
            } else if (dice < 70) {
                const ShieldedAccount& to = keys[driver.uniform(3)];
                if (world.transfer(actor, to.address(), uint32_t(driver.uniform(2) + 1), 40 + driver.uniform(150)).ok())
                    ++accepted;
            } else if (dice < 90) {
                if (world.withdraw(actor, uint32_t(driver.uniform(2) + 1), 15 + driver.uniform(60)).ok()) ++accepted;
            } else {
                if (world.convert(actor, driver.uniform(2) ? "swap-ab" : "stake-aw", 1, 25 + driver.uniform(50),
                                  driver.uniform(2) ? 2 : 3)
                        .ok())
                    ++accepted;
            }
        } catch (const Error&) {
            // funding shortfalls count as steps, not operations
        }
        std::string verdict = zkfi_ref::auditConservation(*world.sim, keys);
        if (!verdict.empty()) {
            ++auditFailures;
            if (firstFailure.empty()) firstFailure = verdict;
        }
    }

    bool pass = accepted >= 200 && auditFailures == 0;
    report(2, "conservation identity holds after every operation", pass,
           std::to_string(accepted) + " accepted ops, " + std::to_string(auditFailures) + " audit failures" +
               (firstFailure.empty() ? "" : "; first: " + firstFailure) + ", " +
               std::to_string(secondsSince(start)).substr(0, 5) + "s");
}

// --- criterion 3: double spends, replays, atomic rejections ------------------

void criterion3() {
    SimWorld world(9003);
    for (int i = 0; i < 6; ++i) REQUIRE_OK(world.deposit(world.alice, 1, 5000));

    // forked envelopes built against the same view before anything lands
    std::vector<TxEnvelope> forks;
    for (int i = 0; i < 6; ++i) {
        TxIntent intent;
        intent.payments.push_back({world.bob.address(), 1, U256(uint64_t(100 + i))});
        forks.push_back(world.makeOperation(world.alice, intent, 1));
    }
    // land the first; every fork now collides on the same notes
    REQUIRE_OK(world.sim->submitViaBundler(forks[0]));

    int attempts = 0, acceptedAttacks = 0, dirtyRejections = 0;
    while (attempts < 1000) {
        for (size_t f = 0; f < forks.size() && attempts < 1000; ++f) {
            Bytes32 before = world.sim->pool().stateDigest();
            OpResult result = world.sim->submitViaBundler(forks[f]);
            ++attempts;
            if (result.ok()) ++acceptedAttacks;
            if (!(world.sim->pool().stateDigest() == before)) ++dirtyRejections;
        }
    }

    bool pass = attempts >= 1000 && acceptedAttacks == 0 && dirtyRejections == 0;
    report(3, "replays and forked spends: zero acceptances, atomic rejections", pass,
           std::to_string(attempts) + " attempts, " + std::to_string(acceptedAttacks) + " accepted, " +
               std::to_string(dirtyRejections) + " state changes on rejection");
}

// --- criterion 4: stealth scanning rates -------------------------------------

void criterion4() {
    auto start = Clock::now();
    Rng rng = Rng::seeded(9004);
    ShieldedAccount receiver = deriveAccount(rng.entropy());

    int recovered = 0;
    for (int i = 0; i < 1000; ++i) {
        uint32_t asset = uint32_t(rng.uniform(100) + 1);
        U256 value = U256(rng.uniform(1u << 20));
        StealthOutput out = createStealthOutput(receiver.address(), asset, value, rng);
        auto secrets = scanAux(out, receiver.viewKey, receiver.signPub);
        if (secrets && secrets->asset == asset && secrets->value == value) ++recovered;
    }

    // non-receiver rejection at the one-byte tag stage
    const int trials = 100000;
    std::vector<ShieldedAccount> others;
    for (int i = 0; i < 16; ++i) others.push_back(deriveAccount(rng.entropy()));
    std::vector<StealthOutput> outputs;
    for (int i = 0; i < 64; ++i) outputs.push_back(createStealthOutput(receiver.address(), 1, U256(5), rng));

    int tagRejections = 0, falseDeliveries = 0;
    for (int i = 0; i < trials; ++i) {
        const ShieldedAccount& eve = others[size_t(i) % others.size()];
        const StealthOutput& out = outputs[size_t(i * 7 + i / 1024) % outputs.size()];
        AffinePoint shared = scalarMul(eve.viewKey, out.ephemeral);
        if (keccak256(compressPoint(shared))[0] != out.viewTag) {
            ++tagRejections;
        } else if (scanAux(out, eve.viewKey, eve.signPub)) {
            ++falseDeliveries;
        }
    }
    double rate = double(tagRejections) / trials;

    // forced tag collisions must still be rejected downstream
    int collisionFixtures = 0, collisionLeaks = 0;
    ShieldedAccount eve = deriveAccount(rng.entropy());
    while (collisionFixtures < 12) {
        Fq blinding = rng.field();
        U256 r = rng.bits248();
        StealthOutput out = createStealthOutput(receiver.address(), 1, U256(9), blinding, r);
        AffinePoint shared = scalarMul(eve.viewKey, out.ephemeral);
        if (keccak256(compressPoint(shared))[0] != out.viewTag) continue;
        ++collisionFixtures;
        if (scanAux(out, eve.viewKey, eve.signPub)) ++collisionLeaks;
    }

    bool rateOk = rate > (255.0 / 256.0 - 0.005) && rate <= (255.0 / 256.0 + 0.005);
    bool pass = recovered == 1000 && rateOk && falseDeliveries == 0 && collisionLeaks == 0;
    char buf[176];
    std::snprintf(buf, sizeof(buf),
                  "%d/1000 recovered, tag rejection %.5f (target 0.99609+-0.005), %d false deliveries, "
                  "%d/12 collision fixtures leaked, %.1fs",
                  recovered, rate, falseDeliveries, collisionLeaks, secondsSince(start));
    report(4, "stealth scanning: full recovery, one-byte tag filter", pass, buf);
}

// --- criterion 5: primitive vectors ------------------------------------------

void criterion5() {
    std::string detail;
    bool pass = true;

    {
        std::ifstream in("vectors/poseidon.json");
        if (!in.good()) {
            report(5, "crypto vectors", false, "vectors/poseidon.json missing; run from the repository root");
            return;
        }
        nlohmann::json doc = nlohmann::json::parse(in);
        int count = 0;
        for (const auto& vec : doc.at("vectors")) {
            std::vector<Fq> inputs;
            for (const auto& v : vec.at("inputs")) inputs.push_back(Fq::fromHex(v.get<std::string>()));
            if (poseidon(inputs).toHex() != vec.at("output").get<std::string>()) pass = false;
            ++count;
        }
        if (count < 20) pass = false;
        detail += "poseidon " + std::to_string(count) + " vectors";
    }
    {
        std::ifstream in("vectors/keccak.json");
        nlohmann::json doc = nlohmann::json::parse(in);
        int count = 0;
        for (const auto& vec : doc.at("vectors")) {
            auto msg = fromHex(vec.at("message").get<std::string>());
            if (toHex(keccak256(msg)) != vec.at("digest").get<std::string>()) pass = false;
            ++count;
        }
        if (count < 5) pass = false;
        detail += ", keccak " + std::to_string(count);
    }
    {
        Rng rng = Rng::seeded(9005);
        for (int i = 0; i < 20; ++i) {
            unsigned arity = unsigned(rng.uniform(6)) + 1;
            std::vector<Fq> inputs;
            std::vector<std::string> decimals;
            for (unsigned k = 0; k < arity; ++k) {
                Fq v = rng.field();
                inputs.push_back(v);
                decimals.push_back(v.toDec());
            }
            if (poseidon(inputs).toDec() != zkfi_ref::poseidonRef(decimals)) pass = false;

            std::vector<uint8_t> msg(size_t(rng.uniform(200)));
            rng.fill(msg);
            if (toHex(keccak256(msg)) != zkfi_ref::keccak256RefHex(msg)) pass = false;
        }
        detail += ", 20 live cross-checks";
    }
    {
        std::ifstream in("vectors/aead_rfc8439.json");
        nlohmann::json vec = nlohmann::json::parse(in);
        auto key = fromHex(vec.at("key").get<std::string>());
        auto nonce = fromHex(vec.at("nonce").get<std::string>());
        auto aad = fromHex(vec.at("aad").get<std::string>());
        auto plaintext = fromHex(vec.at("plaintext").get<std::string>());
        auto sealed = aeadEncrypt(std::span<const uint8_t, 32>(key.data(), 32),
                                  std::span<const uint8_t, 12>(nonce.data(), 12), plaintext, aad);
        if (toHex(std::span<const uint8_t>(sealed.data(), sealed.size() - 16)) !=
            vec.at("ciphertext").get<std::string>())
            pass = false;
        if (toHex(std::span<const uint8_t>(sealed.data() + sealed.size() - 16, 16)) != vec.at("tag").get<std::string>())
            pass = false;
        detail += ", aead vector";
    }
    {
        Rng rng = Rng::seeded(9006);
        int complete = 0;
        std::vector<std::pair<Fq, Fr>> pairs;
        for (int i = 0; i < 100; ++i) {
            Fr key = rng.scalar();
            Fq msg = rng.field();
            if (schnorrVerify(msg, mulBase(key), schnorrSign(msg, key))) ++complete;
            pairs.emplace_back(msg, key);
        }
        int forgeries = 0;
        for (int i = 0; i < 10000; ++i) {
            const auto& [msg, key] = pairs[size_t(i) % pairs.size()];
            Signature sig = schnorrSign(msg, key);
            AffinePoint pub = mulBase(key);
            Fq tamperedMsg = msg;
            switch (i % 3) {
                case 0: sig.response = sig.response + Fr(uint64_t(i % 97 + 1)); break;
                case 1: tamperedMsg = msg + Fq(uint64_t(i % 89 + 1)); break;
                case 2: sig.commitment = mulBase(Fr(uint64_t(i % 83 + 2))); break;
            }
            if (schnorrVerify(tamperedMsg, pub, sig)) ++forgeries;
        }
        if (complete != 100 || forgeries != 0) pass = false;
        detail += ", schnorr " + std::to_string(complete) + "/100 complete, " + std::to_string(forgeries) +
                  "/10000 tampered accepted";
    }

    report(5, "primitive implementations match their references", pass, detail);
}

// --- criterion 6: merkle integrity -------------------------------------------

void criterion6() {
    auto start = Clock::now();
    Rng rng = Rng::seeded(9007);
    NoteTree tree(20);
    int verified = 0, corruptedAccepted = 0;
    for (int i = 0; i < 1000; ++i) {
        Fq leaf = rng.field();
        uint64_t index = tree.append(leaf);
        uint64_t probe = rng.uniform(index + 1);
        Fq probeLeaf = tree.leaf(probe);
        MerklePath path = tree.open(probe);
        if (verifyOpening(tree.root(), probe, probeLeaf, path)) ++verified;

        MerklePath corrupt = path;
        size_t level = rng.uniform(corrupt.siblings.size());
        U256 bits = corrupt.siblings[level].toU256();
        unsigned flip = unsigned(rng.uniform(250));
        U256 mask;
        mask.setBit(flip);
        U256 flipped{bits.w[0] ^ mask.w[0], bits.w[1] ^ mask.w[1], bits.w[2] ^ mask.w[2], bits.w[3] ^ mask.w[3]};
        corrupt.siblings[level] = Fq::fromU256(flipped);
        if (verifyOpening(tree.root(), probe, probeLeaf, corrupt)) ++corruptedAccepted;
    }

    NoteTree small(4);
    int appends = 0;
    bool overflowRejected = false;
    try {
        for (int i = 0; i < 17; ++i) {
            small.append(rng.field());
            ++appends;
        }
    } catch (const Error& e) {
        overflowRejected = e.code() == Errc::TreeFull;
    }

    bool pass = verified == 1000 && corruptedAccepted == 0 && appends == 16 && overflowRejected;
    report(6, "merkle appends, openings and capacity behave exactly", pass,
           std::to_string(verified) + "/1000 verified at depth 20, " + std::to_string(corruptedAccepted) +
               " corrupted accepted, depth-4 appends " + std::to_string(appends) + "/16 then rejected, " +
               std::to_string(secondsSince(start)).substr(0, 5) + "s");
}

// --- criterion 7: compliance threshold ---------------------------------------

void criterion7() {
    Rng rng = Rng::seeded(9008);
    ShieldedAccount revoker = deriveAccount(rng.entropy());
    std::vector<uint8_t> plaintext{'d', 'i', 's', 'c', 'l', 'o', 's', 'e'};
    bool pass = true;
    std::string detail;

    for (auto [t, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 3}, {3, 5}}) {
        GuardianSet set = guardianKeygen(t, n, rng);
        std::string txId = "case-" + std::to_string(t) + "-" + std::to_string(n);
        ComplianceEnvelope env = encryptForCompliance(plaintext, revoker.signPub, set.collectivePub, txId, rng);
        RequestLog log(revoker.signPub);
        RevocationRequest request = makeRevocationRequest(txId, "acceptance", revoker.signKey);
        log.append(request);

        int quorumsOk = 0, quorumsTried = 0, shortFails = 0, shortTried = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            unsigned bits = unsigned(__builtin_popcount(mask));
            if (bits != t && bits != t - 1) continue;
            std::vector<PartialDecryption> partials;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i)) partials.push_back(guardianApprove(request, log, env, set.shares[i]));
            if (bits == t) {
                ++quorumsTried;
                try {
                    InnerCiphertext inner = combinePartials(env, partials, t);
                    if (inner.box != plaintext && revokerDecrypt(inner, revoker.signKey) == plaintext) ++quorumsOk;
                } catch (const Error&) {
                }
            } else {
                ++shortTried;
                try {
                    combinePartials(env, partials, t);
                } catch (const Error&) {
                    ++shortFails;
                }
            }
        }
        if (quorumsOk != quorumsTried || shortFails != shortTried) pass = false;

        // guardians only: the combined quorum output is still a ciphertext
        // their material cannot open
        std::vector<PartialDecryption> quorum;
        for (unsigned i = 0; i < t; ++i) quorum.push_back(guardianApprove(request, log, env, set.shares[i]));
        InnerCiphertext inner = combinePartials(env, quorum, t);
        if (inner.box == plaintext) pass = false;
        try {
            revokerDecrypt(inner, set.shares[0].value);
            pass = false;
        } catch (const Error&) {
        }

        // no partial decryption without a logged request
        RevocationRequest unlogged = makeRevocationRequest("other-tx", "unlogged", revoker.signKey);
        try {
            guardianApprove(unlogged, log, env, set.shares[0]);
            pass = false;
        } catch (const Error&) {
        }

        detail += "(" + std::to_string(t) + "," + std::to_string(n) + "): " + std::to_string(quorumsOk) + "/" +
                  std::to_string(quorumsTried) + " quorums ok, " + std::to_string(shortFails) + "/" +
                  std::to_string(shortTried) + " short fail; ";
    }
    report(7, "threshold de-anonymization is exact and order-enforced", pass, detail);
}

// --- criterion 8: proof backend contract --------------------------------------

void criterion8() {
    auto start = Clock::now();
    Rng rng = Rng::seeded(9009);
    ShieldedAccount alice = deriveAccount(rng.entropy());
    FundedScenario scenario(8);
    std::vector<const FundedScenario::Funded*> pool;
    for (int i = 0; i < 40; ++i)
        pool.push_back(&scenario.fund(alice, uint32_t(rng.uniform(2) + 1), 1 + rng.uniform(200), rng));

    CeremonyResult ceremony = runSetupCeremony(std::vector<Fr>{rng.scalar(), rng.scalar(), rng.scalar()});
    SimulatedSnark backend;

    int completeness = 0, tamperAccepted = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& in1 = *pool[rng.uniform(pool.size())];
        const FundedScenario::Funded* in2 = nullptr;
        uint64_t total = in1.note.value.w[0];
        if (rng.uniform(2)) {
            const auto& candidate = *pool[rng.uniform(pool.size())];
            if (candidate.leaf != in1.leaf && candidate.note.asset == in1.note.asset) {
                in2 = &candidate;
                total += candidate.note.value.w[0];
            }
        }
        uint64_t toNote = rng.uniform(total + 1);
        PublicInputs pub = scenario.freshPublic();
        PrivateInputs wit;
        scenario.setInput(pub, wit, 0, in1);
        if (in2) scenario.setInput(pub, wit, 1, *in2);
        scenario.setOutput(pub, wit, 0, in1.note.asset, toNote, in1.note.stealthAddress);
        if (toNote != total) {
            pub.publicAsset[2] = in1.note.asset;
            pub.publicValue[2] = int64_t(toNote) - int64_t(total);
        }

        Proof proof = backend.prove(ceremony.keys.provingKey, pub, wit);
        if (backend.verify(ceremony.keys.verifyingKey, proof, pub)) ++completeness;

        PublicInputs tampered = pub;
        switch (i % 5) {
            case 0: tampered.root += Fq::one(); break;
            case 1: tampered.nullifier[0] += Fq::one(); break;
            case 2: tampered.outCommitment[0] += Fq::one(); break;
            case 3: tampered.publicValue[2] += 1; break;
            case 4: tampered.publicAsset[2] = tampered.publicAsset[2] == 1 ? 2 : 1; break;
        }
        if (backend.verify(ceremony.keys.verifyingKey, proof, tampered)) ++tamperAccepted;
    }

    // the documented hazard: the ceremony secret forges arbitrary statements
    PublicInputs fabricated;
    fabricated.root = rng.field();
    fabricated.nullifier[0] = rng.field();
    fabricated.publicAsset[0] = 1;
    fabricated.publicValue[0] = -999999;
    Proof forged = SimulatedSnark::forgeWithToxicWaste(ceremony.toxicWaste, fabricated);
    bool forgeryLands = backend.verify(ceremony.keys.verifyingKey, forged, fabricated);

    bool pass = completeness == 1000 && tamperAccepted == 0 && forgeryLands;
    report(8, "proof backend: complete, binding, forgeable by the key holder", pass,
           std::to_string(completeness) + "/1000 complete, " + std::to_string(tamperAccepted) +
               " tampered accepted, forgery " + (forgeryLands ? "lands as documented" : "unexpectedly failed") +
               ", " + std::to_string(secondsSince(start)).substr(0, 5) + "s");
}

// --- criterion 9: performance sanity ------------------------------------------

void criterion9(Clock::time_point suiteStart) {
    Rng rng = Rng::seeded(9010);
    ShieldedAccount alice = deriveAccount(rng.entropy());
    ShieldedAccount bob = deriveAccount(rng.entropy());
    FundedScenario scenario(20);
    for (uint64_t v : {50, 50, 50, 50}) scenario.fund(alice, 1, v, rng);

    LedgerView view;
    view.tree = &scenario.tree;
    view.roots = &scenario.roots;
    for (const auto& f : scenario.notes) view.unspent.push_back({f.note, f.leaf, f.commitment});

    CeremonyResult ceremony = runSetupCeremony(std::vector<Fr>{rng.scalar(), rng.scalar()});
    SimulatedSnark backend;

    auto start = Clock::now();
    TxIntent intent;  // forces 4 inputs and 4 outputs
    intent.payments.push_back({bob.address(), 1, U256(60)});
    intent.payments.push_back({bob.address(), 1, U256(60)});
    intent.payments.push_back({bob.address(), 1, U256(60)});
    intent.fee = Flow{1, U256(10)};
    BuiltTransaction built = buildTransaction(intent, alice, view, rng);
    signInputs(built.privateInputs, alice.signKey);
    Proof proof = backend.prove(ceremony.keys.provingKey, built.publicInputs, built.privateInputs);
    bool verified = backend.verify(ceremony.keys.verifyingKey, proof, built.publicInputs);
    double elapsed = secondsSince(start);

    unsigned n = countInputs(built.publicInputs), m = countOutputs(built.publicInputs);
    double suiteElapsed = secondsSince(suiteStart);
    bool pass = verified && n == 4 && m == 4 && elapsed < 1.0 && suiteElapsed < 300.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "n=%u m=%u build+prove+verify %.3fs (< 1s), suite %.1fs (< 300s)", n, m, elapsed,
                  suiteElapsed);
    report(9, "performance at full statement arity", pass, buf);
}

}  // namespace

int main() {
    auto suiteStart = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(suiteStart);
    std::printf("%s: %d criterion(s) failed, total %.1fs\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures, secondsSince(suiteStart));
    return failures == 0 ? 0 : 1;
}
