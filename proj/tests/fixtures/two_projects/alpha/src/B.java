package alpha;

public class B {
  void run() {
    int y = 1;
    // FIXME overflow
    y = y * 2;
  }
}
