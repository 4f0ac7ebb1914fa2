//! The three table routes agree wherever they describe the same game.

use empress::analysis::{check_complementary, check_relation, Relation};
use empress::closed_forms::{
    fraenkel_pairs, holladay_pairs, queen_bee_pairs, queen_dee_pairs, restricted_pairs, two_queen_dee_pairs,
};
use empress::sources::SourceRegistry;
use empress::{PPositionTable, QueenVariant, SearchMode, Solver};

fn solved(v: QueenVariant, count: usize) -> PPositionTable {
    Solver::new(v).unwrap().p_positions(count, SearchMode::Indexed).unwrap()
}

fn source(spec: &str, count: usize) -> PPositionTable {
    SourceRegistry::new().parse(spec).unwrap().table(count).unwrap()
}

#[test]
fn beatty_pairs_are_holladay_queens() {
    for k in 1..=3 {
        assert_eq!(solved(QueenVariant::KQueen { k }, 400), holladay_pairs(k, 400), "k={k}");
    }
    assert_eq!(solved(QueenVariant::Standard, 400), holladay_pairs(1, 400));
}

/// The band `|u - v| <= k - 1 - j` yields the morphism with parameter `j`;
/// the two coincide only when `j = (k - 1) / 2`.
#[test]
fn restricted_morphisms_are_restricted_strolls() {
    for k in 2..=4 {
        for j in 0..k {
            let game = solved(QueenVariant::RestrictedStroll { k, band: k - 1 - j }, 300);
            assert_eq!(game, restricted_pairs(k, j, 300).unwrap(), "k={k} j={j}");
            assert!(check_relation(&game, Relation::Restricted { k, j }, 300));
        }
    }
    let literal = solved(QueenVariant::RestrictedStroll { k: 2, band: 1 }, 3);
    assert_eq!(literal.pairs(), [(1, 3), (2, 6), (4, 10)]);
}

#[test]
fn widened_queen_is_two_one() {
    let game = solved(QueenVariant::WidenedQueen { scope: 2, stroll: 1 }, 1000);
    assert_eq!(game, source("morphic:two-one", 1000));
    assert!(check_relation(&game, Relation::DoublePlusIndex, 1000));
}

#[test]
fn fraenkel_morphisms_are_widened_queens() {
    for k in 1..=3 {
        for j in 1..=k {
            let game = solved(QueenVariant::WidenedQueen { scope: j, stroll: 1 + k - j }, 200);
            assert_eq!(game, fraenkel_pairs(k, j, 200).unwrap(), "k={k} j={j}");
        }
    }
}

#[test]
fn dee_and_bee_at_depth() {
    assert_eq!(solved(QueenVariant::QueenBee, 2000), queen_bee_pairs(2000));
    assert_eq!(solved(QueenVariant::TWO_QUEEN_DEE, 2000), two_queen_dee_pairs(2000));
    assert_eq!(solved(QueenVariant::QUEEN_DEE, 2000), queen_dee_pairs(2000).unwrap());
    assert_eq!(source("morphic:tribonacci-erase-c", 2000), queen_dee_pairs(2000).unwrap());
}

#[test]
fn catalog_games_are_complementary() {
    for v in QueenVariant::catalog() {
        assert!(check_complementary(&solved(v, 300), 300), "{v}");
    }
}

#[test]
fn higher_dee_is_well_defined() {
    let fast = solved(QueenVariant::KQueenDee { k: 3 }, 100);
    let slow = Solver::new(QueenVariant::KQueenDee { k: 3 }).unwrap().p_positions(100, SearchMode::Exhaustive).unwrap();
    assert_eq!(fast, slow);
    assert!(check_complementary(&fast, 100));
}

#[test]
fn region_examples() {
    let region = Solver::new(QueenVariant::TWO_QUEEN_DEE).unwrap().classify_region(4, SearchMode::Exhaustive).unwrap();
    let ps: Vec<(u64, u64)> = region.p_set().iter().map(|p| (p.x, p.y)).collect();
    assert_eq!(ps, [(0, 0), (1, 3), (3, 1)]);
    assert_eq!(region.is_p((2, 2).into()), Some(false));
    assert_eq!(region.is_p((5, 0).into()), None);
}
