package cobalt;

// Marks experimental API.
@interface Experimental {}

class Tags {
  static final char SLASH = '/';
  static final String BLOCK = "/* not a comment */";
  static final String TEXT = """
      // still not a comment
      """;

  /** Counts leading characters. */
  int count(String s) {
    int n = 0;
    label:
    while (n < s.length()) {
      if (s.charAt(n) == SLASH) {
        break label;
      }
      n++;
    }
    // result excludes the slash
    return n;
  }
}
