use std::collections::VecDeque;

use acc_kit::containers::{circular_index, BoundedQueue, BoundedStack, ContainerError, LinkedList, ShiftArray};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum ListOp {
    Push(i32),
    Insert(usize, i32),
    Delete(usize),
    PopFront,
}

fn list_op() -> impl Strategy<Value = ListOp> {
    prop_oneof![
        any::<i32>().prop_map(ListOp::Push),
        (0usize..12, any::<i32>()).prop_map(|(i, v)| ListOp::Insert(i, v)),
        (0usize..12).prop_map(ListOp::Delete),
        Just(ListOp::PopFront),
    ]
}

proptest! {
    #[test]
    fn queue_is_fifo(cap in 0usize..8, ops in prop::collection::vec(prop::option::of(any::<u8>()), 0..60)) {
        let mut q = BoundedQueue::new(cap);
        let mut model = VecDeque::new();
        for op in ops {
            match op {
                Some(v) if model.len() < cap => { q.enqueue(v).unwrap(); model.push_back(v); }
                Some(v) => prop_assert_eq!(q.enqueue(v), Err(ContainerError::QueueFull)),
                None => prop_assert_eq!(q.dequeue().ok(), model.pop_front()),
            }
            prop_assert!(q.len() <= cap);
            prop_assert_eq!(q.peek().ok(), model.front());
            prop_assert!(q.iter().eq(model.iter()));
        }
    }

    #[test]
    fn stack_is_lifo(cap in 0usize..8, ops in prop::collection::vec(prop::option::of(any::<u8>()), 0..60)) {
        let mut s = BoundedStack::new(cap);
        let mut model = Vec::new();
        for op in ops {
            match op {
                Some(v) if model.len() < cap => { s.push(v).unwrap(); model.push(v); }
                Some(v) => prop_assert_eq!(s.push(v), Err(ContainerError::StackFull)),
                None => prop_assert_eq!(s.pop().ok(), model.pop()),
            }
            prop_assert_eq!(s.peek().ok(), model.last());
            prop_assert_eq!(s.as_slice(), model.as_slice());
        }
    }

    #[test]
    fn evicting_push_keeps_newest(cap in 1usize..6, values in prop::collection::vec(any::<u8>(), 0..30)) {
        let mut s = BoundedStack::new(cap);
        for &v in &values {
            s.push_evicting(v);
        }
        let keep = values.len().saturating_sub(cap);
        prop_assert_eq!(s.as_slice(), &values[keep..]);
    }

    #[test]
    fn list_matches_vec(ops in prop::collection::vec(list_op(), 0..60)) {
        let mut list = LinkedList::new();
        let mut model: Vec<i32> = Vec::new();
        for op in ops {
            match op {
                ListOp::Push(v) => { list.push_back(v); model.push(v); }
                ListOp::Insert(i, v) => { list.insert(i, v); model.insert(i.min(model.len()), v); }
                ListOp::Delete(i) => {
                    let want = (i < model.len()).then(|| model.remove(i));
                    prop_assert_eq!(list.delete(i), want);
                }
                ListOp::PopFront => {
                    let want = (!model.is_empty()).then(|| model.remove(0));
                    prop_assert_eq!(list.pop_front(), want);
                }
            }
            prop_assert!(list.check_links().is_ok());
            prop_assert_eq!(list.to_vec(), model.clone());
            prop_assert_eq!(list.front(), model.first());
            prop_assert_eq!(list.back(), model.last());
            prop_assert_eq!(list.iter().count(), list.len());
        }
    }

    #[test]
    fn insert_then_delete_round_trips(vals in prop::collection::vec(1i64..100, 0..9), i in 0usize..10, v in 1i64..100) {
        let mut arr = ShiftArray::from_values(&vals, 10).unwrap();
        prop_assume!(i <= vals.len());
        arr.insert_at(i, v).unwrap();
        prop_assert_eq!(arr.get(i), Some(v));
        prop_assert_eq!(arr.delete_at(i), Ok(v));
        prop_assert_eq!(arr.as_slice(), vals.as_slice());
    }

    #[test]
    fn circular_index_wraps(i in 0usize..10_000, n in 1usize..50) {
        let c = circular_index(i, n).unwrap();
        prop_assert!(c < n);
        prop_assert_eq!(c, i % n);
    }
}

#[test]
fn circular_index_rejects_zero() {
    assert_eq!(circular_index(3, 0), Err(ContainerError::ZeroModulus));
}

#[test]
fn queue_messages_are_verbatim() {
    let mut q: BoundedQueue<i32> = BoundedQueue::new(0);
    assert_eq!(q.enqueue(1).unwrap_err().to_string(), "Could not add data. Queue is full.");
    assert_eq!(q.dequeue().unwrap_err().to_string(), "Could not remove data. Queue is empty.");
    let mut s: BoundedStack<i32> = BoundedStack::new(0);
    assert_eq!(s.pop().unwrap_err().to_string(), "Could not remove data. Stack is empty.");
}
