//! Bounded queue, bounded stack, linked list and raw array shifting.

use acc_kit::containers::{BoundedQueue, BoundedStack, LinkedList, ShiftArray, ShiftDirection};

fn main() {
    let mut q = BoundedQueue::new(3);
    for v in [10, 20, 30, 40] {
        match q.enqueue(v) {
            Ok(()) => println!("enqueued {v}"),
            Err(e) => println!("{e}"),
        }
    }
    println!("dequeued {:?}, left {:?}", q.dequeue(), q.as_slice());

    let mut s = BoundedStack::new(2);
    s.push('a').unwrap();
    s.push('b').unwrap();
    println!("popped {:?} then {:?} then {}", s.pop(), s.pop(), s.pop().unwrap_err());

    let mut list: LinkedList<&str> = ["ann", "cy"].into_iter().collect();
    list.insert(1, "bob");
    list.delete(0);
    println!("list: {:?}", list.to_vec());

    let mut arr = ShiftArray::from_values(&[1, 2, 3, 4], 6).unwrap();
    arr.shift(1, 3, ShiftDirection::Up).unwrap();
    println!("after shifting 1..=3 up: {:?}", arr.as_slice());
    arr.delete_at(1).unwrap();
    println!("after delete_at(1): {:?}", arr.as_slice());
}
